package demo.p26;

import java.util.*;
import static java.lang.Math.max;
public class C26 extends Base implements Runnable, Comparable<C26> {
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    List<Map<String, List<Integer>>> nested = new HashMap<>();
    String π = "unicode identifier ok"; int naïve = 1;
    @Override
    public int compareTo(C26 o) { return Integer.compare(k, o.k); }
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    switch (k) { case 1 -> go(); default -> { } }
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    String block = """
        text block with "quotes" inside
        """;
	label: while (x-- > 0) { x += y -= 2; break label; }
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
}


