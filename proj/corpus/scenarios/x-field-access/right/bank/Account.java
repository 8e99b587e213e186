package bank;

public class Account {
    public int bal;

    public void deposit(int amount) {
        this.bal = this.bal + amount;
    }
}
