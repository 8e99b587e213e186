package coll;

public class Bag implements Sized {
    private int count;

    public int size() {
        return count;
    }
}
