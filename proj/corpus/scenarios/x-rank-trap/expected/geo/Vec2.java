package geo;

public class Vec2 {
    private int x;
    private int y;

    public Vec2(int x, int y) {
        this.x = x;
        this.y = y;
    }

    public void move(int d) {
        x = x + d;
        y = y + d;
    }
}
