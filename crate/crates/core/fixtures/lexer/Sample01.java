package demo.p1;

import java.util.*;
import static java.lang.Math.max;
public class C1 extends Base implements Runnable, Comparable<C1> {
    weird # chars ` here
    switch (k) { case 1 -> go(); default -> { } }
	label: while (x-- > 0) { x += y -= 2; break label; }
    Runnable r = () -> System.out.println("lambda");
    Function<Integer, Integer> sq = x -> x * x;
    /* block
       comment spanning lines */
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
}