package job;

public class PrintTask implements Task {
    public void run(String input) {
        System.out.println(input);
    }
}
