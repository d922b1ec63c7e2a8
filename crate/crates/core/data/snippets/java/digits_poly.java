public static long digits_poly(long n) {
    String digits = Long.toString(Math.abs(n));
    long result = 0;
    for (int i = 0; i < digits.length(); i++) {
        result = result * 2 + (digits.charAt(i) - '0');
    }
    return result;
}
