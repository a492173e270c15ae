package demo.p23;

import java.util.*;
import static java.lang.Math.max;
public class C23 extends Base implements Runnable, Comparable<C23> {
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    weird # chars ` here
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    @Override
    public int compareTo(C23 o) { return Integer.compare(k, o.k); }
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    List<Map<String, List<Integer>>> nested = new HashMap<>();
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
    // line comment with symbols: { } /* not a block */ "no string"
}


