package geo;

public class Point {
    private int x;
    private int y;

    public Point(int x, int y) {
        this.x = x;
        this.y = y;
    }

    public void move(int d) {
        x = x + d;
        y = y + d;
    }
}
