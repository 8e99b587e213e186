package lib;

import java.util.ArrayList;
import java.util.Collections;
import java.util.List;

public class Shelf {
    private List<Item> items = new ArrayList<>();

    public void add(Item item) {
        items.add(item);
    }

    public List<Item> view() {
        return Collections.unmodifiableList(items);
    }

    public int count() {
        return items.size();
    }

    public List<Item> copy() {
        return new ArrayList<>(items);
    }
}
