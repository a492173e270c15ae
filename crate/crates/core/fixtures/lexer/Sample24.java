package demo.p24;

import java.util.*;
import static java.lang.Math.max;
public class C24 extends Base implements Runnable, Comparable<C24> {
    char c = '\'', d = '\n', e = 'x';
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    int mask = ~0 >>> 3; mask <<= 2; mask >>>= 1; mask ^= 0b1010;
	label: while (x-- > 0) { x += y -= 2; break label; }
    String π = "unicode identifier ok"; int naïve = 1;
}


