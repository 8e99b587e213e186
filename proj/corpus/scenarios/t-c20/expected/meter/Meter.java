package meter;

public class Meter {
    public int total;
}
