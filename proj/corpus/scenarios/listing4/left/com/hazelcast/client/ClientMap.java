package com.hazelcast.client;

public class ClientMap {
    private ClientContext context;

    public ClientContext getContext() {
        return context;
    }

    public boolean containsKey(Object key) {
        Data keyData = getContext().getSerializationService().toData(key);
        return invoke(keyData);
    }

    protected boolean invoke(Data keyData) {
        return keyData != null;
    }
}
