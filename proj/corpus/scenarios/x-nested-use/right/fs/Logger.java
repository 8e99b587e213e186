package fs;

public class Logger {
    public void log(String msg) {
        System.out.println(msg);
    }
}
