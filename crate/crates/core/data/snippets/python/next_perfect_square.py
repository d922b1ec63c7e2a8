def next_perfect_square(n):
    if n < 0:
        return 0
    k = math.isqrt(n) + 1
    return k * k
