package zoo;

public class Bird extends Animal {
    public String name() {
        return "bird";
    }

    @Override
    public int legs() {
        return 0;
    }
}
