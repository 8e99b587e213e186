package repo;

public class Repo {
    private long rows;

    public long count() {
        return rows;
    }
}
