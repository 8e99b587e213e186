package acme.app;

import acme.util.Strings;

public class App {
    public String clean(String s) {
        return Strings.trim(s);
    }
}
