package stat;

public class Counter {
    private int count;

    public void inc() {
        count = count + 1;
    }

    public void add(int k) {
        count = count + k;
    }
}
