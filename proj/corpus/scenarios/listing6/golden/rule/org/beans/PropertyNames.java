package org.beans;

import java.beans.Introspector;
import java.util.Locale;

public class PropertyNames {
    public String upper(String name) {
        return name.toUpperCase(Locale.ROOT);
    }

    public String fromGetter(String getter) {
        return Introspector.decapitalize(getter.substring(3));
    }
}
