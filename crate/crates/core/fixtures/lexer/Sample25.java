package demo.p25;

import java.util.*;
import static java.lang.Math.max;
public class C25 extends Base implements Runnable, Comparable<C25> {
    x = y::method; z = a >= b ? a <= c : !d;
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    // line comment with symbols: { } /* not a block */ "no string"
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    weird # chars ` here
}


