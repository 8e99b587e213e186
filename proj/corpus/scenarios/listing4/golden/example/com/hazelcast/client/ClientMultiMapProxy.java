package com.hazelcast.client;

public class ClientMultiMapProxy extends ClientMap {
    public boolean put(Object key, Object value) {
        Data keyData = getContext().getSerializationService().toData(key);
        Data valueData = getSerializationService().toData(value);
        return invoke(keyData) && invoke(valueData);
    }
}
