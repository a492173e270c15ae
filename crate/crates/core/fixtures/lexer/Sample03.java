package demo.p3;

import java.util.*;
import static java.lang.Math.max;
public class C3 extends Base implements Runnable, Comparable<C3> {
    x = y::method; z = a >= b ? a <= c : !d;
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    char c = '\'', d = '\n', e = 'x';
    // line comment with symbols: { } /* not a block */ "no string"
    String block = """
        text block with "quotes" inside
        """;
    switch (k) { case 1 -> go(); default -> { } }
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    List<Map<String, List<Integer>>> nested = new HashMap<>();
}