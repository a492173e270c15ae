package demo.p18;

import java.util.*;
import static java.lang.Math.max;
public class C18 extends Base implements Runnable, Comparable<C18> {
    weird # chars ` here
    /* block
       comment spanning lines */
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
    String π = "unicode identifier ok"; int naïve = 1;
    switch (k) { case 1 -> go(); default -> { } }
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    List<Map<String, List<Integer>>> nested = new HashMap<>();
    @Override
    public int compareTo(C18 o) { return Integer.compare(k, o.k); }
    // line comment with symbols: { } /* not a block */ "no string"
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
}


