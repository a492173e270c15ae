class Open {
    /* comment never closed
    int hidden;
