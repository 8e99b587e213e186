package check;

public class MaxLength implements Validator {
    public boolean check(String value, boolean strict) {
        return value.length() < 10;
    }
}
