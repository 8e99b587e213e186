package job;

public class EchoTask implements Task {
    public void execute(String input) {
        System.err.println(input);
    }
}
