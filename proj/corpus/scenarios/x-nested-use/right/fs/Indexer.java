package fs;

import java.util.List;

public class Indexer {
    private Logger logger = new Logger();

    public void index(List<String> files) {
        int n = 0;
        for (String f : files) {
            n = n + 1;
            if (f.length() > 0) {
                logger.log(f);
            }
        }
    }
}
