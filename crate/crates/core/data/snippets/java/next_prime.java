public static long next_prime(long n) {
    long candidate = Math.max(n + 1, 2);
    while (true) {
        boolean isPrime = true;
        for (long d = 2; d * d <= candidate; d++) {
            if (candidate % d == 0) {
                isPrime = false;
                break;
            }
        }
        if (isPrime) {
            return candidate;
        }
        candidate += 1;
    }
}
