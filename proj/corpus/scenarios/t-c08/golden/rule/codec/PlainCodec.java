package codec;

public class PlainCodec implements Codec {
    public String encode(String s) {
        return s;
    }

    @Override
    public String decode(String s) {
        return null;
    }
}
