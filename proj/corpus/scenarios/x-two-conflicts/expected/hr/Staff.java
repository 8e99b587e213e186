package hr;

public class Staff {
    public String name;

    public String label() {
        return name;
    }
}
