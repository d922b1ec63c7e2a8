def rotate_sorted_prefix(s):
    if not s:
        return s
    k = 1
    while k < len(s) and s[k] >= s[k - 1]:
        k += 1
    return s[k:] + s[:k]
