package org.jsonschema;

public class SchemaBuilder {
    public Schema reference(String target) {
        Schema schema = new Schema();
        schema.setRef("#/definitions/" + target);
        return schema;
    }
}
