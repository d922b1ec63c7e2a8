public static String partition_before_m(String s) {
    StringBuilder first = new StringBuilder();
    StringBuilder second = new StringBuilder();
    for (int i = 0; i < s.length(); i++) {
        char c = s.charAt(i);
        if (Character.isLetter(c) && Character.toLowerCase(c) < 'm') {
            first.append(c);
        } else {
            second.append(c);
        }
    }
    return first.toString() + second.toString();
}
