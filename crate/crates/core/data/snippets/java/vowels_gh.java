public static String vowels_gh(String s) {
    StringBuilder result = new StringBuilder();
    for (int i = 0; i < s.length(); i++) {
        char c = s.charAt(i);
        if ("aAeEiIoOuU".indexOf(c) >= 0) {
            result.append("gh");
        } else {
            result.append(c);
        }
    }
    return result.toString();
}
