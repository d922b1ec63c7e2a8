def digit_name_first_last(n):
    names = ["zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"]
    result = ""
    for digit in str(abs(n)):
        name = names[int(digit)]
        result += (name[0] + name[-1]).upper()
    return result
