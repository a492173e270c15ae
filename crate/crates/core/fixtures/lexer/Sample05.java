package demo.p5;

import java.util.*;
import static java.lang.Math.max;
public class C5 extends Base implements Runnable, Comparable<C5> {
    List<Map<String, List<Integer>>> nested = new HashMap<>();
    switch (k) { case 1 -> go(); default -> { } }
    @Override
    public int compareTo(C5 o) { return Integer.compare(k, o.k); }
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    void varargs(String... names) { assert names.length >= 0 : "never"; }
	label: while (x-- > 0) { x += y -= 2; break label; }
}


