long long alpha_sum(const std::string& s) {
    long long total = 0;
    for (char c : s) {
        if (std::isalpha(c)) {
            total += std::tolower(c) - 'a' + 1;
        }
    }
    return total;
}
