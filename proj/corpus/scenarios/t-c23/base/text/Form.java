package text;

public class Form {
    public String clean(String v) {
        return Text.trim(v);
    }
}
