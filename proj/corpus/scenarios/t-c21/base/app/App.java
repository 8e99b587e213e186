package app;

public class App {
    private Logger logger = new Logger();

    public void start() {
        logger.log("start");
    }
}
