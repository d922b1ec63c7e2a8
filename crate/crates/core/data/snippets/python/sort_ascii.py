def sort_ascii(s):
    return "".join(sorted(s))
