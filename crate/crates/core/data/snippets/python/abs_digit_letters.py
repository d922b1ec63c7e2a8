def abs_digit_letters(n):
    result = ""
    for digit in str(abs(n)):
        d = int(digit)
        if d == 0:
            result += "xX"
        else:
            result += chr(ord('a') + d - 1) + chr(ord('A') + d - 1)
    return result
