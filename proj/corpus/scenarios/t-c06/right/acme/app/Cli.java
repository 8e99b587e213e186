package acme.app;

import acme.util.Strings;

public class Cli {
    public String arg(String raw) {
        return Strings.trim(raw);
    }
}
