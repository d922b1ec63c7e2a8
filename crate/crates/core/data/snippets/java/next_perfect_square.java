public static long next_perfect_square(long n) {
    if (n < 0) {
        return 0;
    }
    long k = 0;
    while (k * k <= n) {
        k += 1;
    }
    return k * k;
}
