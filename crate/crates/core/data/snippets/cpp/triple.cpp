std::string triple(const std::string& s) {
    return s + s + s;
}
