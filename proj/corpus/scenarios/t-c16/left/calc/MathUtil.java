package calc;

public class MathUtil {
    public static int twice(int x) {
        return x * 2;
    }

    public static int square(int x) {
        return x * x;
    }
}
