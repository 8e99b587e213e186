package plug;

public class CorePlugin implements Plugin {
    @Override
    public void start() {
    }

    @Override
    public void stop() {
    }
}
