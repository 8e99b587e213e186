package text;

public class Text {
    public static String strip(String s) {
        return s.strip();
    }
}
