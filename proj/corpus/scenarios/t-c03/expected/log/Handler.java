package log;

public class Handler {
    public void handle(String msg, int level) {
        if (level > 0) {
            write(msg);
        }
    }

    protected void write(String text) {
    }
}
