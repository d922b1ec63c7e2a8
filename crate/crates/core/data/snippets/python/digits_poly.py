def digits_poly(n):
    result = 0
    for digit in str(abs(n)):
        result = result * 2 + int(digit)
    return result
