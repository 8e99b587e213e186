package job;

public interface Task {
    void execute(String input);
}
