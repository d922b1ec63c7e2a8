std::string surround(const std::string& s) {
    return "abcde" + s + "edcba";
}
