std::string sort_ascii(std::string s) {
    std::sort(s.begin(), s.end());
    return s;
}
