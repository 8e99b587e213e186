package load;

public class Loader {
    public int load(String s) {
        return Integer.parseInt(s);
    }
}
