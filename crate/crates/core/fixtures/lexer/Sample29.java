class Chars {
    char bad = 'ab
    String tail = "eof string