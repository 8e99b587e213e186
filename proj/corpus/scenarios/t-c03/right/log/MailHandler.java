package log;

public class MailHandler extends Handler {
    @Override
    public void handle(String msg) {
        write("mail: " + msg);
    }
}
