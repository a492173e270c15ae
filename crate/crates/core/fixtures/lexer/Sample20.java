package demo.p20;

import java.util.*;
import static java.lang.Math.max;
public class C20 extends Base implements Runnable, Comparable<C20> {
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
    switch (k) { case 1 -> go(); default -> { } }
    String π = "unicode identifier ok"; int naïve = 1;
	label: while (x-- > 0) { x += y -= 2; break label; }
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
}
