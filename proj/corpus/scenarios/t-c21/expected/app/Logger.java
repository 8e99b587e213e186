package app;

public class Logger {
    public void log(String msg, int level) {
        if (level > 0) {
            System.out.println(msg);
        }
    }
}
