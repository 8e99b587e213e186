package repo;

public class Dashboard {
    public String show(Repo repo) {
        int n = repo.count();
        return "rows: " + n;
    }
}
