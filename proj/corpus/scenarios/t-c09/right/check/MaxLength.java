package check;

public class MaxLength implements Validator {
    public boolean check(String value) {
        return value.length() < 10;
    }
}
