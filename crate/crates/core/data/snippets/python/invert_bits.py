def invert_bits(n):
    bits = max(n.bit_length(), 1)
    width = 1
    while width < bits:
        width *= 2
    return (1 << width) - 1 - n
