package stat;

public class Counter {
    private int cnt;

    public void inc() {
        cnt = cnt + 1;
    }
}
