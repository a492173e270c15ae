package demo.p14;

import java.util.*;
import static java.lang.Math.max;
public class C14 extends Base implements Runnable, Comparable<C14> {
    // line comment with symbols: { } /* not a block */ "no string"
    String π = "unicode identifier ok"; int naïve = 1;
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    x = y::method; z = a >= b ? a <= c : !d;
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    @Override
    public int compareTo(C14 o) { return Integer.compare(k, o.k); }
    switch (k) { case 1 -> go(); default -> { } }
}


