package meter;

public class Gauge {
    public int show(Meter m) {
        int v = m.total;
        return v * 10;
    }
}
