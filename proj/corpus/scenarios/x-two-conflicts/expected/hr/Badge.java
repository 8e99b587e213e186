package hr;

public class Badge {
    public String print(Staff s) {
        return "[" + s.name + "]";
    }
}
