package coll;

public class Bag {
    private int count;

    public int size() {
        return count;
    }
}
