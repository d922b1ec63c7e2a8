std::string partition_before_m(const std::string& s) {
    std::string first;
    std::string second;
    for (char c : s) {
        if (std::isalpha(c) && std::tolower(c) < 'm') {
            first += c;
        } else {
            second += c;
        }
    }
    return first + second;
}
