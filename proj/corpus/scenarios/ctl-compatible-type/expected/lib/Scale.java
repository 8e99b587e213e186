package lib;

public class Scale {
    public void show(Item item) {
        long w = item.weight;
        System.out.println(w);
    }
}
