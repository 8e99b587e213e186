package zoo;

public class Dog extends Animal {
    public String name() {
        return "dog";
    }
}
