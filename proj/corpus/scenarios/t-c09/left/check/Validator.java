package check;

public interface Validator {
    boolean check(String value, boolean strict);
}
