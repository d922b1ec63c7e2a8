public static String triple(String s) {
    return s + s + s;
}
