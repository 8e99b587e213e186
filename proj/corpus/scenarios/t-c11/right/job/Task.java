package job;

public interface Task {
    void run(String input);
}
