public static String abs_digit_letters(long n) {
    String digits = Long.toString(Math.abs(n));
    StringBuilder result = new StringBuilder();
    for (int i = 0; i < digits.length(); i++) {
        int d = digits.charAt(i) - '0';
        if (d == 0) {
            result.append("xX");
        } else {
            result.append((char) ('a' + d - 1)).append((char) ('A' + d - 1));
        }
    }
    return result.toString();
}
