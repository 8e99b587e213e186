package store;

import java.util.ArrayList;
import java.util.List;

public class Store {
    private List<String> items = new ArrayList<>();

    public List<String> sorted() {
        List<String> copy = new ArrayList<>(items);
        copy.sort(null);
        return copy;
    }
}
