package coll;

public class Bag {
    private int count;

    public long size() {
        return count;
    }
}
