package acme.app;

import acme.text.Strings;

public class App {
    public String clean(String s) {
        return Strings.trim(s);
    }
}
