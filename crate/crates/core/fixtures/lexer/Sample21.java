package demo.p21;

import java.util.*;
import static java.lang.Math.max;
public class C21 extends Base implements Runnable, Comparable<C21> {
    char c = '\'', d = '\n', e = 'x';
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    weird # chars ` here
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
    String block = """
        text block with "quotes" inside
        """;
	label: while (x-- > 0) { x += y -= 2; break label; }
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
}
