package repo;

public class Dashboard {
    public String show(Repo repo) {
        long n = repo.count();
        return "rows: " + n;
    }
}
