package demo.p13;

import java.util.*;
import static java.lang.Math.max;
public class C13 extends Base implements Runnable, Comparable<C13> {
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    // line comment with symbols: { } /* not a block */ "no string"
    switch (k) { case 1 -> go(); default -> { } }
    /* block
       comment spanning lines */
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    char c = '\'', d = '\n', e = 'x';
    List<Map<String, List<Integer>>> nested = new HashMap<>();
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
}


