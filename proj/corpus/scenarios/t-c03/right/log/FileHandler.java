package log;

public class FileHandler extends Handler {
    @Override
    public void handle(String msg) {
        write("file: " + msg);
    }
}
