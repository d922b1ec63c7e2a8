std::string shift_back(std::string s) {
    for (char& c : s) {
        if (c >= 'a' && c <= 'z') {
            c = 'a' + (c - 'a' + 25) % 26;
        } else if (c >= 'A' && c <= 'Z') {
            c = 'A' + (c - 'A' + 25) % 26;
        }
    }
    return s;
}
