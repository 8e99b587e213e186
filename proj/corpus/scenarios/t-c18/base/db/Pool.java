package db;

public class Pool {
    public Conn open(String h) {
        Conn c = new Conn(h);
        return c;
    }
}
