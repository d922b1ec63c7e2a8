public static String periodic_element(long num) {
    int i = (int) Math.floorMod(num, 118);
    // ELEMENT_NAMES[0] equals "Hydrogen", ELEMENT_NAMES[1] equals "Helium", ...,
    // ELEMENT_NAMES[117] equals "Oganesson"; the i-th element is not 0-indexed.
    return ELEMENT_NAMES[i - 1];
}
