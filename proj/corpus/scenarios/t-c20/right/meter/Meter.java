package meter;

public class Meter {
    public int total;
    public int legacy;
}
