package log;

public class MailHandler extends Handler {
    @Override
    public void handle(String msg, int level) {
        write("mail: " + msg);
    }
}
