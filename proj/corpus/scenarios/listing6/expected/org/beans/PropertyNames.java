package org.beans;

import java.util.Locale;

public class PropertyNames {
    public String upper(String name) {
        return name.toUpperCase(Locale.ROOT);
    }

    public String fromGetter(String getter) {
        return getter.substring(3, 4).toLowerCase(Locale.ROOT) + getter.substring(4);
    }
}
