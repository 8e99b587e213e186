package db;

public class Conn {
    private String host;

    public Conn(String host) {
        this.host = host;
    }
}
