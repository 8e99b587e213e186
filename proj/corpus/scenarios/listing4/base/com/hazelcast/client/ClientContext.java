package com.hazelcast.client;

public class ClientContext {
    private String name;

    public String getName() {
        return name;
    }
}
