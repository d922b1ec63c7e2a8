public static String to_roman(long n) {
    long m = Math.floorMod(n, 10000);
    int[] values = {1000, 900, 500, 400, 100, 90, 50, 40, 10, 9, 5, 4, 1};
    String[] symbols = {"M", "CM", "D", "CD", "C", "XC", "L", "XL", "X", "IX", "V", "IV", "I"};
    StringBuilder result = new StringBuilder();
    for (int i = 0; i < values.length; i++) {
        while (m >= values[i]) {
            result.append(symbols[i]);
            m -= values[i];
        }
    }
    return result.toString();
}
