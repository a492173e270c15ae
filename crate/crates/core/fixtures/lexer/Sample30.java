class Block {
    String t = """
        text block never closed
