def count2_base3(n):
    n = abs(n)
    if n == 0:
        return 3
    count = 0
    while n > 0:
        if n % 3 == 2:
            count += 1
        n //= 3
    return count * 7 + 3
