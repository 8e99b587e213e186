package load;

public class Loader {
    public int load(String s) {
        return LegacyParser.parse(s);
    }
}
