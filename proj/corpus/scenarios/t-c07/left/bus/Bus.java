package bus;

import java.util.ArrayList;
import java.util.List;

public class Bus {
    private List<EventListener> listeners = new ArrayList<>();

    public void publish(String event) {
        for (EventListener l : listeners) {
            l.onEvent(event);
        }
    }
}
