package com.hazelcast.config;

public class TypeSerializerConfig {
    private String className;

    private String typeClassName;

    public TypeSerializerConfig() {
    }

    public TypeSerializerConfig setClassName(final String className) {
        this.className = className;
        return this;
    }

    public TypeSerializerConfig setTypeClassName(final String typeClassName) {
        this.typeClassName = typeClassName;
        return this;
    }
}
