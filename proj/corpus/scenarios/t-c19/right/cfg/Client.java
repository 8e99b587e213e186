package cfg;

public class Client {
    public void setup(Settings settings) {
        int t = settings.timeout;
        System.out.println(t);
    }
}
