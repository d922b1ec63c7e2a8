long long next_prime(long long n) {
    long long candidate = std::max(n + 1, 2LL);
    while (true) {
        bool is_prime = true;
        for (long long d = 2; d * d <= candidate; d++) {
            if (candidate % d == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) {
            return candidate;
        }
        candidate += 1;
    }
}
