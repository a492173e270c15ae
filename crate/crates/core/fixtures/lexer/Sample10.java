package demo.p10;

import java.util.*;
import static java.lang.Math.max;
public class C10 extends Base implements Runnable, Comparable<C10> {
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
    String π = "unicode identifier ok"; int naïve = 1;
    String s = "tab\t quote\" backslash\\ unicode \u00e9";
    void varargs(String... names) { assert names.length >= 0 : "never"; }
    weird # chars ` here
}


