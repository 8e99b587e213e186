package cfg;

public class Client {
    public void setup(Settings settings) {
        long t = settings.timeout;
        System.out.println(t);
    }
}
