package io.rpc;

import java.util.concurrent.ExecutorService;
import java.util.concurrent.Executors;

public class RpcServer {
    private final String host;
    private final int port;
    private final int backlog;
    private final boolean ssl;
    private final int timeout;
    private final int maxConnections;
    private ExecutorService executor;

    public RpcServer(String host, ExecutorService executor, int port, int backlog, boolean ssl, int timeout, int maxConnections) {
        this.host = host;
        this.executor = executor;
        this.port = port;
        this.backlog = backlog;
        this.ssl = ssl;
        this.timeout = timeout;
        this.maxConnections = maxConnections;
    }

    public RpcServer(String host, int port) {
        this(host, Executors.newFixedThreadPool(Runtime.getRuntime().availableProcessors() * 2), port, 50, false, 3000, 100);
    }

    public String address() {
        return host + ":" + port;
    }

    public boolean secure() {
        return ssl;
    }

    public RpcServer(String host, int port, int backlog, boolean ssl) {
        this(host, Executors.newFixedThreadPool(Runtime.getRuntime().availableProcessors() * 2), port, backlog, ssl, 3000, 100);
    }
}
