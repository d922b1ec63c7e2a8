public static String alt_caps_reverse(String s) {
    StringBuilder result = new StringBuilder();
    for (int i = 0; i < s.length(); i++) {
        char c = s.charAt(i);
        if (i % 2 == 0) {
            result.append(Character.toLowerCase(c));
        } else {
            result.append(Character.toUpperCase(c));
        }
    }
    return result.reverse().toString();
}
