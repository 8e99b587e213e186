package db;

public class Client {
    public Conn connect(String addr) {
        Conn c = new Conn(addr, 5432);
        return c;
    }
}
