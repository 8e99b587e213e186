package geo;

public class Shapes {
    public Point origin() {
        Point p = new Point(0, 0);
        return p;
    }

    public Point shift(int x, int y) {
        Point q = new Point(x, y);
        q.move(1);
        return q;
    }
}
