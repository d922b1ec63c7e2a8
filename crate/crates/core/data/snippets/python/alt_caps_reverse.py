def alt_caps_reverse(s):
    result = ""
    for i, c in enumerate(s):
        if i % 2 == 0:
            result += c.lower()
        else:
            result += c.upper()
    return result[::-1]
