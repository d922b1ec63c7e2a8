public static String bump_every_second(String s) {
    StringBuilder result = new StringBuilder();
    for (int i = 0; i < s.length(); i++) {
        char c = s.charAt(i);
        if (i % 2 == 1 && c >= 'a' && c <= 'z') {
            result.append((char) ('a' + (c - 'a' + 1) % 26));
        } else if (i % 2 == 1 && c >= 'A' && c <= 'Z') {
            result.append((char) ('A' + (c - 'A' + 1) % 26));
        } else {
            result.append(c);
        }
    }
    return result.toString();
}
