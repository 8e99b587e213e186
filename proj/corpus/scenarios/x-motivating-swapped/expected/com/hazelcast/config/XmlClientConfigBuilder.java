package com.hazelcast.config;

public class XmlClientConfigBuilder {
    private void handleSerializers(final Node node, SerializationConfig serializationConfig) {
        for (Node child : new IterableNodeList(node.getChildNodes())) {
            final String name2 = cleanNodeName(child);
            final String value = getValue(child);
            if ("serializer".equals(name2)) {
                SerializerConfig serializerConfig = new SerializerConfig();
                serializerConfig.setClassName(value);
                final String typeClassName = getAttribute(child, "type-class");
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

    private String getAttribute(final Node node, final String attributeName) {
        return node.getAttribute(attributeName);
    }
}
