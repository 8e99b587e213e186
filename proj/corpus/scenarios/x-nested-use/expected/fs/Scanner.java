package fs;

import java.util.List;

public class Scanner {
    private Logger logger = new Logger();

    public void scan(List<String> files) {
        for (String f : files) {
            if (f.length() > 0) {
                logger.log(f, 2);
            }
        }
    }
}
