def bump_every_second(s):
    result = ""
    for i, c in enumerate(s):
        if i % 2 == 1 and 'a' <= c <= 'z':
            result += chr((ord(c) - ord('a') + 1) % 26 + ord('a'))
        elif i % 2 == 1 and 'A' <= c <= 'Z':
            result += chr((ord(c) - ord('A') + 1) % 26 + ord('A'))
        else:
            result += c
    return result
