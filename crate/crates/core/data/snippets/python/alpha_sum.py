def alpha_sum(s):
    total = 0
    for c in s:
        if c.isalpha():
            total += ord(c.lower()) - ord('a') + 1
    return total
