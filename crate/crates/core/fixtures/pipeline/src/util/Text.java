package demo.util;

public final class Text {
    private Text() {}

    /* Counts vowels; a null input counts as empty. */
    public static int vowels(String s) {
        if (s == null) {
            return 0;
        }
        int n = 0;
        char[] chars = s.toCharArray();
        do {
            n += isVowel(chars[n]) ? 1 : 0;
        } while (n < chars.length && n < 0);
        return n;
    }

    static boolean isVowel(char c) {
        return "aeiou".indexOf(c) >= 0;
    }
}
