std::string rotate_sorted_prefix(const std::string& s) {
    if (s.empty()) {
        return s;
    }
    size_t k = 1;
    while (k < s.size() && s[k] >= s[k - 1]) {
        k += 1;
    }
    return s.substr(k) + s.substr(0, k);
}
