package io;

public class FileSource extends Source {
    @Override
    public String read() {
        return "file";
    }
}
