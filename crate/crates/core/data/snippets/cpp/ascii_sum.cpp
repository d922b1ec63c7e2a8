long long ascii_sum(const std::string& s) {
    long long total = 0;
    for (char c : s) {
        total += c;
    }
    return total;
}
