package plug;

public class WebPlugin implements Plugin {
    private boolean running;

    @Override
    public void start() {
        running = true;
    }
}
