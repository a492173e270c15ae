package demo.p16;

import java.util.*;
import static java.lang.Math.max;
public class C16 extends Base implements Runnable, Comparable<C16> {
    weird # chars ` here
    // line comment with symbols: { } /* not a block */ "no string"
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    char c = '\'', d = '\n', e = 'x';
    String block = """
        text block with "quotes" inside
        """;
	label: while (x-- > 0) { x += y -= 2; break label; }
    switch (k) { case 1 -> go(); default -> { } }
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
}