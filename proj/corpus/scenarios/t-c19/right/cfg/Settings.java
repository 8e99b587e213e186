package cfg;

public class Settings {
    public int timeout = 30;
}
