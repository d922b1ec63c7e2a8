def ascii_sum(s):
    total = 0
    for c in s:
        total += ord(c)
    return total
