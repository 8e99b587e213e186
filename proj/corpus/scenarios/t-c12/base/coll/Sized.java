package coll;

public interface Sized {
    int size();
}
