std::string abs_digit_letters(long long n) {
    std::string digits = std::to_string(std::llabs(n));
    std::string result;
    for (char c : digits) {
        int d = c - '0';
        if (d == 0) {
            result += "xX";
        } else {
            result += (char) ('a' + d - 1);
            result += (char) ('A' + d - 1);
        }
    }
    return result;
}
