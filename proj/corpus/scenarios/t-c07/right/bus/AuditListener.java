package bus;

public class AuditListener implements Listener {
    public void onEvent(String event) {
    }
}
