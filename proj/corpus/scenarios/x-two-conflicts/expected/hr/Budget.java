package hr;

public class Budget {
    public int plan(Payroll p) {
        return p.yearly(1000) + p.yearly(2000);
    }
}
