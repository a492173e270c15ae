package demo.p11;

import java.util.*;
import static java.lang.Math.max;
public class C11 extends Base implements Runnable, Comparable<C11> {
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
	label: while (x-- > 0) { x += y -= 2; break label; }
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    String π = "unicode identifier ok"; int naïve = 1;
    int[] arr = {1, 2, 3}; int v = arr[0]++ + --arr[1];
}


