package log;

public class FileHandler extends Handler {
    @Override
    public void handle(String msg, int level) {
        write("file: " + msg);
    }
}
