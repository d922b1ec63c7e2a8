public static String digit_name_first_last(long n) {
    String[] names = {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"};
    String digits = Long.toString(Math.abs(n));
    StringBuilder result = new StringBuilder();
    for (int i = 0; i < digits.length(); i++) {
        String name = names[digits.charAt(i) - '0'];
        result.append(Character.toUpperCase(name.charAt(0)));
        result.append(Character.toUpperCase(name.charAt(name.length() - 1)));
    }
    return result.toString();
}
