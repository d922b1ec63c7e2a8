std::string bump_every_second(std::string s) {
    for (size_t i = 1; i < s.size(); i += 2) {
        char c = s[i];
        if (c >= 'a' && c <= 'z') {
            s[i] = 'a' + (c - 'a' + 1) % 26;
        } else if (c >= 'A' && c <= 'Z') {
            s[i] = 'A' + (c - 'A' + 1) % 26;
        }
    }
    return s;
}
