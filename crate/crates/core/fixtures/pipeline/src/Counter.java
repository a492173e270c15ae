package demo;

public class Counter {
    private int count;

    public void increment() {
        count++;
    }

    public void decrement() {
        if (count > 0) {
            count--;
        }
    }

    public int get() {
        return count;
    }
}
