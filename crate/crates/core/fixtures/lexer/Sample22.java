package demo.p22;

import java.util.*;
import static java.lang.Math.max;
public class C22 extends Base implements Runnable, Comparable<C22> {
    switch (k) { case 1 -> go(); default -> { } }
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    char c = '\'', d = '\n', e = 'x';
    /* block
       comment spanning lines */
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    // line comment with symbols: { } /* not a block */ "no string"
    @Override
    public int compareTo(C22 o) { return Integer.compare(k, o.k); }
    x = y::method; z = a >= b ? a <= c : !d;
}
