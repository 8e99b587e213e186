package acme.app;

import acme.text.Strings;

public class Cli {
    public String arg(String raw) {
        return Strings.trim(raw);
    }
}
