package redis.clients.jedis;

public class JedisCluster {
    private JedisClusterConnectionHandler connectionHandler;
    private int maxRedirections;

    public String get(final String key) {
        return new JedisClusterCommand<String>(connectionHandler, maxRedirections) {
            public String execute(Jedis connection) {
                return connection.get(key);
            }
        }.run(key);
    }
}
