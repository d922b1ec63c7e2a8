public static long alpha_sum(String s) {
    long total = 0;
    for (int i = 0; i < s.length(); i++) {
        char c = s.charAt(i);
        if (Character.isLetter(c)) {
            total += Character.toLowerCase(c) - 'a' + 1;
        }
    }
    return total;
}
