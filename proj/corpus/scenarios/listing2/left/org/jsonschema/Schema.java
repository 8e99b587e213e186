package org.jsonschema;

public class Schema {
    private String ref;
    private String title;

    public void setRef(String ref) {
        this.ref = ref;
    }

    public void setTitle(String title) {
        this.title = title;
    }
}
