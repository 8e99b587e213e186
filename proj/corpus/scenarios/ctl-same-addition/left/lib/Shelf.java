package lib;

import java.util.ArrayList;
import java.util.List;

public class Shelf {
    private List<Item> items = new ArrayList<>();

    public void add(Item item) {
        items.add(item);
    }

    public boolean empty() {
        return items.isEmpty();
    }

    public int count() {
        return items.size();
    }
}
