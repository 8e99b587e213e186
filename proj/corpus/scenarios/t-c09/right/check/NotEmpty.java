package check;

public class NotEmpty implements Validator {
    public boolean check(String value) {
        return value.length() > 0;
    }
}
