std::string alt_caps_reverse(std::string s) {
    for (size_t i = 0; i < s.size(); i++) {
        if (i % 2 == 0) {
            s[i] = std::tolower(s[i]);
        } else {
            s[i] = std::toupper(s[i]);
        }
    }
    std::reverse(s.begin(), s.end());
    return s;
}
