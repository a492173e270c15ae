package demo.p6;

import java.util.*;
import static java.lang.Math.max;
public class C6 extends Base implements Runnable, Comparable<C6> {
    String π = "unicode identifier ok"; int naïve = 1;
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
    @Override
    public int compareTo(C6 o) { return Integer.compare(k, o.k); }
	label: while (x-- > 0) { x += y -= 2; break label; }
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    weird # chars ` here
    x = y::method; z = a >= b ? a <= c : !d;
    String block = """
        text block with "quotes" inside
        """;
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    /* block
       comment spanning lines */
}
