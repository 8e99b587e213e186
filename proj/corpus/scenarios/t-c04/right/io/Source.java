package io;

public class Source {
    public Object read() {
        return null;
    }
}
