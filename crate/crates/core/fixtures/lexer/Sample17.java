package demo.p17;

import java.util.*;
import static java.lang.Math.max;
public class C17 extends Base implements Runnable, Comparable<C17> {
    void loop() {
        for (int i = 0; i < 10; ++i) { if (i % 2 == 0 && i != 4 || !done) continue; }
    }
    List<Map<String, List<Integer>>> nested = new HashMap<>();
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    weird # chars ` here
    x = y::method; z = a >= b ? a <= c : !d;
}


