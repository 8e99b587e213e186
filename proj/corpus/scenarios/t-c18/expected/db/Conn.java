package db;

public class Conn {
    private String host;
    private int port;

    public Conn(String host, int port) {
        this.host = host;
        this.port = port;
    }
}
