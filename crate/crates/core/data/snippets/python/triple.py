def triple(s):
    return s + s + s
