package cfg;

public class Settings {
    public long timeout = 30;
}
