def vowels_gh(s):
    result = ""
    for c in s:
        if c in "aAeEiIoOuU":
            result += "gh"
        else:
            result += c
    return result
