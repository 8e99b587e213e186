package job;

public class EchoTask implements Task {
    public void run(String input) {
        System.err.println(input);
    }
}
