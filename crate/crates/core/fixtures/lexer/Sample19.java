package demo.p19;

import java.util.*;
import static java.lang.Math.max;
public class C19 extends Base implements Runnable, Comparable<C19> {
    x = y::method; z = a >= b ? a <= c : !d;
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    /* block
       comment spanning lines */
    @Override
    public int compareTo(C19 o) { return Integer.compare(k, o.k); }
}


