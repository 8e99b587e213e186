package org.jsonschema;

public class SchemaBuilder {
    public Schema reference(String target) {
        Schema schema = new Schema();
        schema.set$ref("#/definitions/" + target);
        return schema;
    }
}
