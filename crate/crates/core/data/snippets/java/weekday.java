public static String weekday(long n) {
    String[] days = {"sunday", "monday", "tuesday", "wednesday", "thursday", "friday", "saturday"};
    return days[(int) Math.floorMod(n, 7)];
}
