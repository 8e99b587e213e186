package cfg;

public class Server {
    public void boot(Settings settings) {
        int t = settings.timeout;
        System.out.println("boot " + t);
    }
}
