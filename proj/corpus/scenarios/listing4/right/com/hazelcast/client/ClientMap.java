package com.hazelcast.client;

public class ClientMap {
    private ClientContext context;
    private SerializationService service;

    public ClientContext getContext() {
        return context;
    }

    public SerializationService getSerializationService() {
        return service;
    }

    public boolean containsKey(Object key) {
        Data keyData = getSerializationService().toData(key);
        return invoke(keyData);
    }

    protected boolean invoke(Data keyData) {
        return keyData != null;
    }
}
