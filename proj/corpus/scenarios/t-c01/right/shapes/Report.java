package shapes;

public class Report {
    public int doubleArea() {
        Circle c = new Circle(2);
        return c.area() * 2;
    }
}
