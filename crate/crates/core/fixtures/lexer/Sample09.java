package demo.p9;

import java.util.*;
import static java.lang.Math.max;
public class C9 extends Base implements Runnable, Comparable<C9> {
    @Override
    public int compareTo(C9 o) { return Integer.compare(k, o.k); }
    switch (k) { case 1 -> go(); default -> { } }
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    String block = """
        text block with "quotes" inside
        """;
    char c = '\'', d = '\n', e = 'x';
	label: while (x-- > 0) { x += y -= 2; break label; }
}


