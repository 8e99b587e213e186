package shop;

public class Shop {
    private Mailer mailer = new Mailer();

    public void checkout(String customer) {
        mailer.snd(customer);
    }

    public void refund(String customer) {
        mailer.snd(customer);
    }
}
