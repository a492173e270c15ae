package demo;

import java.util.List;

public class Worker implements Runnable {
    private final List<String> jobs;
    private volatile boolean running = true;

    public Worker(List<String> jobs) {
        this.jobs = jobs;
    }

    @Override
    public void run() {
        for (;;) {
            if (!running) {
                break;
            }
            for (String job : jobs) {
                process(job, false);
            }
        }
    }

    void process(String job, boolean verbose) {
        // placeholder for real work
        System.out.println("job: " + job);
    }

    void stop() {
        running = false;
    }
}
