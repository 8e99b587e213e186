package org.beans;

import java.util.Locale;

public class PropertyNames {
    public String upper(String name) {
        return name.toUpperCase(Locale.ROOT);
    }
}
