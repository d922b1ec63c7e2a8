public static String surround(String s) {
    return "abcde" + s + "edcba";
}
