package demo.p8;

import java.util.*;
import static java.lang.Math.max;
public class C8 extends Base implements Runnable, Comparable<C8> {
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    @Override
    public int compareTo(C8 o) { return Integer.compare(k, o.k); }
	label: while (x-- > 0) { x += y -= 2; break label; }
    char c = '\'', d = '\n', e = 'x';
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    x = y::method; z = a >= b ? a <= c : !d;
    weird # chars ` here
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
    String π = "unicode identifier ok"; int naïve = 1;
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
}


