std::string caesar8(std::string s) {
    for (char& c : s) {
        if (c >= 'a' && c <= 'z') {
            c = 'a' + (c - 'a' + 8) % 26;
        } else if (c >= 'A' && c <= 'Z') {
            c = 'A' + (c - 'A' + 8) % 26;
        }
    }
    return s;
}
