package text;

public class Search {
    public String query(String v) {
        return Text.trim(v);
    }
}
