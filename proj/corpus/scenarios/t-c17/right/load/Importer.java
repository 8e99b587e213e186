package load;

public class Importer {
    public int read(String raw) {
        return LegacyParser.parse(raw);
    }
}
