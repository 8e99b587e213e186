package calc;

public class MathUtil {
    public static int square(int x) {
        return x * x;
    }

    public static int twice(int x) {
        return x + x;
    }
}
