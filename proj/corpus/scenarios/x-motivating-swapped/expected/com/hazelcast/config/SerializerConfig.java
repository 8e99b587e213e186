package com.hazelcast.config;

public class SerializerConfig {
    private String className;

    private String typeClassName;

    public SerializerConfig() {
    }

    public SerializerConfig setClassName(final String className) {
        this.className = className;
        return this;
    }

    public SerializerConfig setTypeClassName(final String typeClassName) {
        this.typeClassName = typeClassName;
        return this;
    }
}
