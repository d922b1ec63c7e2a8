long long digits_poly(long long n) {
    std::string digits = std::to_string(std::llabs(n));
    long long result = 0;
    for (char c : digits) {
        result = result * 2 + (c - '0');
    }
    return result;
}
