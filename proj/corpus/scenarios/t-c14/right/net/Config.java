package net;

public class Config {
    private String host;

    public String host() {
        return host;
    }

    private int port = 8080;
}
