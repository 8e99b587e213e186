package bank;

public class Audit {
    public boolean overdrawn(Account account) {
        return account.balance < 0;
    }
}
