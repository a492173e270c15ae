package demo.p4;

import java.util.*;
import static java.lang.Math.max;
public class C4 extends Base implements Runnable, Comparable<C4> {
    String π = "unicode identifier ok"; int naïve = 1;
    /* block
       comment spanning lines */
    switch (k) { case 1 -> go(); default -> { } }
    String block = """
        text block with "quotes" inside
        """;
    Object o = cond ? a : b; boolean t = o instanceof String str && str.isEmpty();
}