std::string vowels_gh(const std::string& s) {
    std::string result;
    for (char c : s) {
        if (std::string("aAeEiIoOuU").find(c) != std::string::npos) {
            result += "gh";
        } else {
            result += c;
        }
    }
    return result;
}
