package hr;

public class Payroll {
    public int yearly(int base) {
        return base * 12;
    }
}
