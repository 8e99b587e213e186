package com.hazelcast.config;

public class XmlClientConfigBuilder {
    private void handleSerializers(final Node node, SerializationConfig serializationConfig) {
        for (Node child : new IterableNodeList(node.getChildNodes())) {
            final String name2 = cleanNodeName(child);
            final String value = getValue(child);
            if ("type-serializer".equals(name2)) {
                TypeSerializerConfig typeSerializerConfig = new TypeSerializerConfig();
                typeSerializerConfig.setClassName(value);
                final String typeClassName = getAttribute(child, "type-class");
                typeSerializerConfig.setTypeClassName(typeClassName);
                serializationConfig.addTypeSerializer(typeSerializerConfig);
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
