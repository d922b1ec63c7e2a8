long long invert_bits(long long n) {
    int bits = 1;
    long long m = n >> 1;
    while (m > 0) {
        bits += 1;
        m >>= 1;
    }
    int width = 1;
    while (width < bits) {
        width *= 2;
    }
    return ((1LL << width) - 1) - n;
}
