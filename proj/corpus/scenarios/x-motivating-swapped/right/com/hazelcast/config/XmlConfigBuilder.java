package com.hazelcast.config;

public class XmlConfigBuilder {
    private void handleSerializers(final Node node, SerializationConfig serializationConfig) {
        for (Node child : new IterableNodeList(node.getChildNodes())) {
            final String name = cleanNodeName(child);
            final String value = getValue(child);
            if ("serializer".equals(name)) {
                SerializerConfig serializerConfig = new SerializerConfig();
                serializerConfig.setClassName(value);
                final String typeClassName = retrieveAttribute(child, "type-class");
                serializerConfig.setTypeClassName(typeClassName);
                serializationConfig.addSerializerConfig(serializerConfig);
            }
        }
    }

    private String cleanNodeName(final Node node) {
        return node.getNodeName();
    }

    private String getValue(final Node node) {
        return node.getTextContent();
    }

    private String retrieveAttribute(final Node node, final String attributeName) {
        return node.getAttribute(attributeName);
    }
}
