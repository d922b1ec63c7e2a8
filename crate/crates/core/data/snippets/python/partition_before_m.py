def partition_before_m(s):
    first = ""
    second = ""
    for c in s:
        if c.isalpha() and c.lower() < 'm':
            first += c
        else:
            second += c
    return first + second
