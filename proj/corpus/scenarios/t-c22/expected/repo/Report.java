package repo;

public class Report {
    public String total(Repo repo) {
        long n = repo.count();
        return "total " + n;
    }
}
