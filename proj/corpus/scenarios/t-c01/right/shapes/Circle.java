package shapes;

public class Circle {
    private int radius;

    public Circle(int radius) {
        this.radius = radius;
    }

    public int area() {
        return 3 * radius * radius;
    }
}
