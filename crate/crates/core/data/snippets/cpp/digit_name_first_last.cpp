std::string digit_name_first_last(long long n) {
    const std::string names[] = {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"};
    std::string digits = std::to_string(std::llabs(n));
    std::string result;
    for (char c : digits) {
        const std::string& name = names[c - '0'];
        result += (char) std::toupper(name.front());
        result += (char) std::toupper(name.back());
    }
    return result;
}
