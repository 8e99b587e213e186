package geo;

public class Layout {
    public void nudge(int x, int y) {
        Point mid = new Point(x, y);
        mid.move(2);
        System.out.println(mid);
    }
}
