package demo.p7;

import java.util.*;
import static java.lang.Math.max;
public class C7 extends Base implements Runnable, Comparable<C7> {
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    String block = """
        text block with "quotes" inside
        """;
    x = y::method; z = a >= b ? a <= c : !d;
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
}
