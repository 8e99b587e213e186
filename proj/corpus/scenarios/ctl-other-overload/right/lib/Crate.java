package lib;

public class Crate {
    public Item pack(String name) {
        return new Item(name, 5);
    }
}
