package shop;

public class Mailer {
    public void snd(String to) {
        System.out.println("mail to " + to);
    }
}
