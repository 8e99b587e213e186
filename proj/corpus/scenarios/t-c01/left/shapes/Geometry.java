package shapes;

public class Geometry {
    public int unitArea() {
        Round c = new Round(1);
        return c.area();
    }
}
