package fs;

public class Logger {
    public void log(String msg, int depth) {
        System.out.println(depth + " " + msg);
    }
}
