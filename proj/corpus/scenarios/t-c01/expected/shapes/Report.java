package shapes;

public class Report {
    public int doubleArea() {
        Round c = new Round(2);
        return c.area() * 2;
    }
}
