package bus;

public interface Listener {
    void onEvent(String event);
}
