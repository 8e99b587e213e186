package lib;

public class Item {
    private String title;
    public long weight;

    public Item(String title) {
        this.title = title;
    }

    public Item(String title, long weight) {
        this.title = title;
        this.weight = weight;
    }

    public String title() {
        return title;
    }

    public long price() {
        return weight * 2;
    }
}
