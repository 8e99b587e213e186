package redis.clients.jedis;

public class JedisCluster {
    private JedisClusterConnectionHandler connectionHandler;
    private int timeout;
    private int maxRedirections;

    public String get(final String key) {
        return new JedisClusterCommand<String>(connectionHandler, timeout, maxRedirections) {
            public String execute(Jedis connection) {
                return connection.get(key);
            }
        }.run(key);
    }

    public Set<String> spop(final String key, final long count) {
        return new JedisClusterCommand<Set<String>>(connectionHandler, timeout, maxRedirections) {
            public Set<String> execute(Jedis connection) {
                return connection.spop(key, count);
            }
        }.run(key);
    }
}
