package bank;

public class Account {
    public int balance;

    public void deposit(int amount) {
        this.balance = this.balance + amount;
    }
}
