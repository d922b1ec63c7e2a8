public static String shift_back(String s) {
    StringBuilder result = new StringBuilder();
    for (int i = 0; i < s.length(); i++) {
        char c = s.charAt(i);
        if (c >= 'a' && c <= 'z') {
            result.append((char) ('a' + (c - 'a' + 25) % 26));
        } else if (c >= 'A' && c <= 'Z') {
            result.append((char) ('A' + (c - 'A' + 25) % 26));
        } else {
            result.append(c);
        }
    }
    return result.toString();
}
