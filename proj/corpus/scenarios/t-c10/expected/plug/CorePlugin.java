package plug;

public class CorePlugin implements Plugin {
    @Override
    public void start() {
    }
}
