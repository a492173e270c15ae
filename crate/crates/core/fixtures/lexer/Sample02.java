package demo.p2;

import java.util.*;
import static java.lang.Math.max;
public class C2 extends Base implements Runnable, Comparable<C2> {
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    x = y::method; z = a >= b ? a <= c : !d;
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
    /* block
       comment spanning lines */
    weird # chars ` here
	label: while (x-- > 0) { x += y -= 2; break label; }
}


