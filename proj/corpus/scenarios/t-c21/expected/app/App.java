package app;

public class App {
    private Logger logger = new Logger();

    public void start() {
        logger.log("start", 1);
    }

    public void stop() {
        logger.log("stop", 1);
    }
}
