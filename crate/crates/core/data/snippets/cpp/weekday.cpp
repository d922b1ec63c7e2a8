std::string weekday(long long n) {
    const std::string days[] = {"sunday", "monday", "tuesday", "wednesday", "thursday", "friday", "saturday"};
    return days[((n % 7) + 7) % 7];
}
