package log;

public class Handler {
    public void handle(String msg) {
        write(msg);
    }

    protected void write(String text) {
    }
}
