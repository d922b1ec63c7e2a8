public static String caesar8(String s) {
    StringBuilder result = new StringBuilder();
    for (int i = 0; i < s.length(); i++) {
        char c = s.charAt(i);
        if (c >= 'a' && c <= 'z') {
            result.append((char) ('a' + (c - 'a' + 8) % 26));
        } else if (c >= 'A' && c <= 'Z') {
            result.append((char) ('A' + (c - 'A' + 8) % 26));
        } else {
            result.append(c);
        }
    }
    return result.toString();
}
