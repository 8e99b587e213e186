package hr;

public class Budget {
    public int plan(Payroll p) {
        return p.calc(1000) + p.calc(2000);
    }
}
