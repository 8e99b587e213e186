package zoo;

public class Bird extends Animal {
    public String name() {
        return "bird";
    }

    public int legs() {
        return 2;
    }
}
