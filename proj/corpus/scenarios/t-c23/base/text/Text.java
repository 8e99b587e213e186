package text;

public class Text {
    public static String trim(String s) {
        return s.trim();
    }

    public static String strip(String s) {
        return s.strip();
    }
}
