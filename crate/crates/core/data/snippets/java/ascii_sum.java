public static long ascii_sum(String s) {
    long total = 0;
    for (int i = 0; i < s.length(); i++) {
        total += s.charAt(i);
    }
    return total;
}
