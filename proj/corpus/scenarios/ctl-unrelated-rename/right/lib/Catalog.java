package lib;

public class Catalog {
    public String first(Shelf shelf) {
        Item item = new Item("first");
        shelf.add(item);
        return item.title();
    }
}
