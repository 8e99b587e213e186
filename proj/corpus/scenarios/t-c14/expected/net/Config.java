package net;

public class Config {
    private int port = 80;
    private String host;

    public String host() {
        return host;
    }
}
