package load;

public class LegacyParser {
    public static int parse(String s) {
        return Integer.valueOf(s).intValue();
    }
}
