package hr;

public class Staff {
    public String nm;

    public String label() {
        return nm;
    }
}
