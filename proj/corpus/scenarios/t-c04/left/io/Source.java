package io;

public class Source {
    public String read() {
        return "";
    }
}
