package geo;

public class Shapes {
    public Vec2 origin() {
        Vec2 p = new Vec2(0, 0);
        return p;
    }

    public Vec2 shift(int x, int y) {
        Vec2 shifted = new Vec2(x, y);
        shifted.move(1);
        return shifted;
    }
}
