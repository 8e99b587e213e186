package repo;

public class Repo {
    private int rows;

    public int count() {
        return rows;
    }
}
