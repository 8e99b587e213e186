package codec;

public class ReverseCodec implements Codec {
    public String encode(String s) {
        return new StringBuilder(s).reverse().toString();
    }
}
