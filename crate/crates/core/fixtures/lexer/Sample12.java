package demo.p12;

import java.util.*;
import static java.lang.Math.max;
public class C12 extends Base implements Runnable, Comparable<C12> {
    weird # chars ` here
    switch (k) { case 1 -> go(); default -> { } }
    String block = """
        text block with "quotes" inside
        """;
    // line comment with symbols: { } /* not a block */ "no string"
	label: while (x-- > 0) { x += y -= 2; break label; }
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    char c = '\'', d = '\n', e = 'x';
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    x = y::method; z = a >= b ? a <= c : !d;
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
}
