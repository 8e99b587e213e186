package io;

public class FileSource extends Source {
    @Override
    public Object read() {
        return "file";
    }
}
