package repo;

public class Report {
    public String total(Repo repo) {
        int n = repo.count();
        return "total " + n;
    }
}
