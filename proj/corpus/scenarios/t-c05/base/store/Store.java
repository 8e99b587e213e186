package store;

import java.util.ArrayList;
import java.util.Collections;
import java.util.List;

public class Store {
    private List<String> items = new ArrayList<>();

    public List<String> sorted() {
        List<String> copy = new ArrayList<>(items);
        Collections.sort(copy);
        return copy;
    }
}
