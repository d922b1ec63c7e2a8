def surround(s):
    return "abcde" + s + "edcba"
