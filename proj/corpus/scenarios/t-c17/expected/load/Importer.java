package load;

public class Importer {
    public int read(String raw) {
        return Integer.parseInt(raw);
    }
}
