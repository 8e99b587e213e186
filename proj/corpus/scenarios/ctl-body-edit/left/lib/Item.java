package lib;

public class Item {
    private String title;
    public int weight;

    public Item(String title) {
        this.title = title;
    }

    public Item(String title, int weight) {
        this.title = title;
        this.weight = weight;
    }

    public String title() {
        return title;
    }

    public int price() {
        int p = weight * 2;
        return p + 1;
    }
}
