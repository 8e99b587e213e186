package lib;

public abstract class Base {
    public abstract String id();
}
