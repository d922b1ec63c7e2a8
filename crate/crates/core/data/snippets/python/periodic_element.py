def periodic_element(num):
    i = num % 118
    # ELEMENT_NAMES[0] == "Hydrogen", ELEMENT_NAMES[1] == "Helium", ...,
    # ELEMENT_NAMES[117] == "Oganesson"; the i-th element is not 0-indexed.
    return ELEMENT_NAMES[i - 1]
