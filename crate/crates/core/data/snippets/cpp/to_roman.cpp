std::string to_roman(long long n) {
    long long m = ((n % 10000) + 10000) % 10000;
    const int values[] = {1000, 900, 500, 400, 100, 90, 50, 40, 10, 9, 5, 4, 1};
    const std::string symbols[] = {"M", "CM", "D", "CD", "C", "XC", "L", "XL", "X", "IX", "V", "IV", "I"};
    std::string result;
    for (int i = 0; i < 13; i++) {
        while (m >= values[i]) {
            result += symbols[i];
            m -= values[i];
        }
    }
    return result;
}
