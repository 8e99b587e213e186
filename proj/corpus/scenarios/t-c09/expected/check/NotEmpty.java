package check;

public class NotEmpty implements Validator {
    public boolean check(String value, boolean strict) {
        if (strict) {
            return value.trim().length() > 0;
        }
        return value.length() > 0;
    }
}
