package job;

public class PrintTask implements Task {
    public void execute(String input) {
        System.out.println(input);
    }
}
