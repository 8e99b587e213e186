package bus;

import java.util.ArrayList;
import java.util.List;

public class Bus {
    private List<Listener> listeners = new ArrayList<>();

    public void publish(String event) {
        for (Listener l : listeners) {
            l.onEvent(event);
        }
    }
}
