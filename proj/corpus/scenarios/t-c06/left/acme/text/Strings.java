package acme.text;

public class Strings {
    public static String trim(String s) {
        return s.trim();
    }
}
