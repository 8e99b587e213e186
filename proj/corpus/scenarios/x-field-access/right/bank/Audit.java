package bank;

public class Audit {
    public boolean overdrawn(Account account) {
        return account.bal < 0;
    }
}
