    String broken = "never closed
    int after = 1;
}
