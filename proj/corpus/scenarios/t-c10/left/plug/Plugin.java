package plug;

public interface Plugin {
    void start();
}
