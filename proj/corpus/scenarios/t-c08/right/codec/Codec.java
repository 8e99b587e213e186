package codec;

public interface Codec {
    String encode(String s);
}
