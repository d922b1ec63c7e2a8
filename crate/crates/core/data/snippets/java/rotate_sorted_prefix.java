public static String rotate_sorted_prefix(String s) {
    if (s.isEmpty()) {
        return s;
    }
    int k = 1;
    while (k < s.length() && s.charAt(k) >= s.charAt(k - 1)) {
        k += 1;
    }
    return s.substring(k) + s.substring(0, k);
}
