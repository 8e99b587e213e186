package bus;

public class AuditListener implements EventListener {
    public void onEvent(String event) {
    }
}
