package lib;

public abstract class Root {
    public abstract String id();
}
