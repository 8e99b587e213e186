package com.hazelcast.client;

public class ClientContext {
    private String name;
    private SerializationService service;

    public String getName() {
        return name;
    }

    public SerializationService getSerializationService() {
        return service;
    }
}
