package geo;

public class Layout {
    public void nudge(int x, int y) {
        Vec2 mid = new Vec2(x, y);
        mid.move(2);
        System.out.println(mid);
    }
}
