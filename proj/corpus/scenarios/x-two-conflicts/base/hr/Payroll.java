package hr;

public class Payroll {
    public int calc(int base) {
        return base * 12;
    }
}
