package shapes;

public class Round {
    private int radius;

    public Round(int radius) {
        this.radius = radius;
    }

    public int area() {
        return 3 * radius * radius;
    }
}
