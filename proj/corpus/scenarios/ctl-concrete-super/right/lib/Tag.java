package lib;

public class Tag extends Base {
    public String id() {
        return "tag";
    }
}
