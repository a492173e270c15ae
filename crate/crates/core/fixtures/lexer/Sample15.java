package demo.p15;

import java.util.*;
import static java.lang.Math.max;
public class C15 extends Base implements Runnable, Comparable<C15> {
    private static final long SEED = 0x5DEECE66DL;
    private double ratio = 1.5e-3;
    float f = .5f, g = 3.f;
    @Override
    public int compareTo(C15 o) { return Integer.compare(k, o.k); }
    String block = """
        text block with "quotes" inside
        """;
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    char c = '\'', d = '\n', e = 'x';
    List<Map<String, List<Integer>>> nested = new HashMap<>();
}
