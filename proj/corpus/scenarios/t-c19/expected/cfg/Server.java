package cfg;

public class Server {
    public void boot(Settings settings) {
        long t = settings.timeout;
        System.out.println("boot " + t);
    }
}
