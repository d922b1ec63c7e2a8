//! The 22 built-in instructions: executable semantics, metadata, and test
//! vectors.
//!
//! Edge cases the one-line descriptions leave open are pinned down here and
//! exercised by the bundled test vectors:
//!
//! - Number-to-number and number-to-text instructions operate on `|n|` where
//!   noted; `bit_length(0)` is 1; base-3 of 0 is `"0"`.
//! - `periodic_element` and `to_roman` reduce with the non-negative
//!   (mathematical) modulus and treat a zero residue as a precondition
//!   violation: there is no 0th element and no Roman zero.
//! - `invert_bits` rejects negative input.
//! - All case transformations are ASCII-only; non-letters keep their
//!   positions and are never altered by casing or shifting.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::oracle::ApplyError;
use crate::pool::{InstructionSpec, Language, LengthEffect, SemanticsFn};
use crate::value::{Value, ValueType};

/// IUPAC English element names; line `k` of the asset names element `k`.
pub static ELEMENT_NAMES: Lazy<Vec<&'static str>> = Lazy::new(|| {
    let names: Vec<&'static str> = include_str!("../data/elements.txt").lines().collect();
    assert_eq!(names.len(), 118, "element table must have 118 entries");
    names
});

/// Uppercased (first, last) letters of the digit names zero..nine.
const DIGIT_NAME_EDGES: [&str; 10] = ["ZO", "OE", "TO", "TE", "FR", "FE", "SX", "SN", "ET", "NE"];

const WEEKDAYS: [&str; 7] = [
    "sunday",
    "monday",
    "tuesday",
    "wednesday",
    "thursday",
    "friday",
    "saturday",
];

/// Subtractive Roman notation; thousands repeat "M" without a cap.
const ROMAN_PAIRS: [(u32, &str); 13] = [
    (1000, "M"),
    (900, "CM"),
    (500, "D"),
    (400, "CD"),
    (100, "C"),
    (90, "XC"),
    (50, "L"),
    (40, "XL"),
    (10, "X"),
    (9, "IX"),
    (5, "V"),
    (4, "IV"),
    (1, "I"),
];

fn number(v: &Value) -> &BigInt {
    match v {
        Value::Number(n) => n,
        Value::Text(_) => unreachable!("input type checked before semantics run"),
    }
}

fn text(v: &Value) -> &str {
    match v {
        Value::Text(s) => s,
        Value::Number(_) => unreachable!("input type checked before semantics run"),
    }
}

fn precondition(id: &str, v: &Value) -> ApplyError {
    ApplyError::PreconditionViolated {
        id: id.to_string(),
        value: v.clone(),
    }
}

/// `bit_length(|n|)`, with the 0 case pinned to 1 so the metric is total.
fn bit_length(n: &BigInt) -> u64 {
    n.bits().max(1)
}

fn decimal_digits(n: &BigInt) -> Vec<u8> {
    n.magnitude()
        .to_string()
        .bytes()
        .map(|b| b - b'0')
        .collect()
}

// -- number -> number ------------------------------------------------------

fn count2_base3(v: &Value) -> Result<Value, ApplyError> {
    let mut m = number(v).magnitude().clone();
    let three = BigUint::from(3u32);
    let two = BigUint::from(2u32);
    let mut count: u64 = 0;
    while !m.is_zero() {
        let (quotient, remainder) = m.div_rem(&three);
        if remainder == two {
            count += 1;
        }
        m = quotient;
    }
    Ok(Value::number(count * 7 + 3))
}

fn invert_bits(v: &Value) -> Result<Value, ApplyError> {
    let n = number(v);
    if n.is_negative() {
        return Err(precondition("invert_bits", v));
    }
    let width = bit_length(n).next_power_of_two();
    let mask = (BigInt::one() << width) - 1;
    Ok(Value::Number(mask - n))
}

fn next_prime(v: &Value) -> Result<Value, ApplyError> {
    let mut candidate = number(v) + 1;
    if candidate < BigInt::from(2) {
        candidate = BigInt::from(2);
    }
    while !is_prime(candidate.magnitude()) {
        candidate += 1;
    }
    Ok(Value::Number(candidate))
}

/// Deterministic Miller-Rabin with the first twelve prime witnesses, exact
/// for all inputs below 3.3e24 (far beyond what chains produce).
fn is_prime(n: &BigUint) -> bool {
    const WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if *n < BigUint::from(2u32) {
        return false;
    }
    for w in WITNESSES {
        let w = BigUint::from(w);
        if *n == w {
            return true;
        }
        if (n % &w).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for w in WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn next_perfect_square(v: &Value) -> Result<Value, ApplyError> {
    let n = number(v);
    if n.is_negative() {
        return Ok(Value::number(0u32));
    }
    let k = n.sqrt() + 1;
    Ok(Value::Number(&k * &k))
}

fn digits_poly(v: &Value) -> Result<Value, ApplyError> {
    let mut result = BigInt::zero();
    for digit in decimal_digits(number(v)) {
        result = result * 2 + digit;
    }
    Ok(Value::Number(result))
}

// -- number -> text ---------------------------------------------------------

fn abs_digit_letters(v: &Value) -> Result<Value, ApplyError> {
    let mut out = String::new();
    for digit in decimal_digits(number(v)) {
        if digit == 0 {
            out.push_str("xX");
        } else {
            out.push((b'a' + digit - 1) as char);
            out.push((b'A' + digit - 1) as char);
        }
    }
    Ok(Value::Text(out))
}

fn digit_name_first_last(v: &Value) -> Result<Value, ApplyError> {
    let mut out = String::new();
    for digit in decimal_digits(number(v)) {
        out.push_str(DIGIT_NAME_EDGES[digit as usize]);
    }
    Ok(Value::Text(out))
}

fn periodic_element(v: &Value) -> Result<Value, ApplyError> {
    let i = number(v).mod_floor(&BigInt::from(118));
    if i.is_zero() {
        return Err(precondition("periodic_element", v));
    }
    let i = i.to_usize().expect("residue fits usize");
    Ok(Value::text(ELEMENT_NAMES[i - 1]))
}

fn to_roman(v: &Value) -> Result<Value, ApplyError> {
    let m = number(v).mod_floor(&BigInt::from(10000));
    if m.is_zero() {
        return Err(precondition("to_roman", v));
    }
    let mut m = m.to_u32().expect("residue fits u32");
    let mut out = String::new();
    for (value, symbol) in ROMAN_PAIRS {
        while m >= value {
            out.push_str(symbol);
            m -= value;
        }
    }
    Ok(Value::Text(out))
}

fn weekday(v: &Value) -> Result<Value, ApplyError> {
    let i = number(v).mod_floor(&BigInt::from(7));
    let i = i.to_usize().expect("residue fits usize");
    Ok(Value::text(WEEKDAYS[i]))
}

// -- text -> text -----------------------------------------------------------

fn alt_caps_reverse(v: &Value) -> Result<Value, ApplyError> {
    let out: String = text(v)
        .chars()
        .enumerate()
        .map(|(i, c)| {
            if i % 2 == 0 {
                c.to_ascii_lowercase()
            } else {
                c.to_ascii_uppercase()
            }
        })
        .collect();
    Ok(Value::Text(out.chars().rev().collect()))
}

fn sort_ascii(v: &Value) -> Result<Value, ApplyError> {
    let mut chars: Vec<char> = text(v).chars().collect();
    chars.sort();
    Ok(Value::Text(chars.into_iter().collect()))
}

fn shift_letter(c: char, offset: u32) -> char {
    let base = if c.is_ascii_lowercase() {
        b'a'
    } else if c.is_ascii_uppercase() {
        b'A'
    } else {
        return c;
    };
    let position = c as u32 - base as u32;
    char::from(base + ((position + offset) % 26) as u8)
}

fn shift_back(v: &Value) -> Result<Value, ApplyError> {
    Ok(Value::Text(
        text(v).chars().map(|c| shift_letter(c, 25)).collect(),
    ))
}

fn bump_every_second(v: &Value) -> Result<Value, ApplyError> {
    let out = text(v)
        .chars()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { shift_letter(c, 1) } else { c })
        .collect();
    Ok(Value::Text(out))
}

fn partition_before_m(v: &Value) -> Result<Value, ApplyError> {
    let before_m = |c: char| c.is_ascii_alphabetic() && c.to_ascii_lowercase() < 'm';
    let s = text(v);
    let mut out: String = s.chars().filter(|&c| before_m(c)).collect();
    out.extend(s.chars().filter(|&c| !before_m(c)));
    Ok(Value::Text(out))
}

fn surround(v: &Value) -> Result<Value, ApplyError> {
    Ok(Value::Text(format!("abcde{}edcba", text(v))))
}

fn triple(v: &Value) -> Result<Value, ApplyError> {
    Ok(Value::Text(text(v).repeat(3)))
}

fn caesar8(v: &Value) -> Result<Value, ApplyError> {
    Ok(Value::Text(
        text(v).chars().map(|c| shift_letter(c, 8)).collect(),
    ))
}

fn vowels_gh(v: &Value) -> Result<Value, ApplyError> {
    let mut out = String::new();
    for c in text(v).chars() {
        if "aAeEiIoOuU".contains(c) {
            out.push_str("gh");
        } else {
            out.push(c);
        }
    }
    Ok(Value::Text(out))
}

fn rotate_sorted_prefix(v: &Value) -> Result<Value, ApplyError> {
    let chars: Vec<char> = text(v).chars().collect();
    if chars.is_empty() {
        return Ok(Value::text(""));
    }
    let mut k = 1;
    while k < chars.len() && chars[k] >= chars[k - 1] {
        k += 1;
    }
    let mut out: String = chars[k..].iter().collect();
    out.extend(&chars[..k]);
    Ok(Value::Text(out))
}

// -- text -> number ---------------------------------------------------------

fn alpha_sum(v: &Value) -> Result<Value, ApplyError> {
    let total: u64 = text(v)
        .chars()
        .filter(char::is_ascii_alphabetic)
        .map(|c| (c.to_ascii_lowercase() as u64) - ('a' as u64) + 1)
        .sum();
    Ok(Value::number(total))
}

fn ascii_sum(v: &Value) -> Result<Value, ApplyError> {
    let total: u64 = text(v).chars().map(|c| c as u64).sum();
    Ok(Value::number(total))
}

/// Id-to-semantics bindings for the registry.
pub fn semantics_table() -> Vec<(&'static str, SemanticsFn)> {
    fn entry(
        id: &'static str,
        f: fn(&Value) -> Result<Value, ApplyError>,
    ) -> (&'static str, SemanticsFn) {
        (id, Arc::new(f))
    }
    vec![
        entry("count2_base3", count2_base3),
        entry("invert_bits", invert_bits),
        entry("next_prime", next_prime),
        entry("next_perfect_square", next_perfect_square),
        entry("digits_poly", digits_poly),
        entry("abs_digit_letters", abs_digit_letters),
        entry("digit_name_first_last", digit_name_first_last),
        entry("periodic_element", periodic_element),
        entry("to_roman", to_roman),
        entry("weekday", weekday),
        entry("alt_caps_reverse", alt_caps_reverse),
        entry("sort_ascii", sort_ascii),
        entry("shift_back", shift_back),
        entry("bump_every_second", bump_every_second),
        entry("partition_before_m", partition_before_m),
        entry("surround", surround),
        entry("triple", triple),
        entry("caesar8", caesar8),
        entry("vowels_gh", vowels_gh),
        entry("rotate_sorted_prefix", rotate_sorted_prefix),
        entry("alpha_sum", alpha_sum),
        entry("ascii_sum", ascii_sum),
    ]
}

macro_rules! snippet_set {
    ($id:literal) => {
        [
            (
                Language::Python,
                include_str!(concat!("../data/snippets/python/", $id, ".py")),
            ),
            (
                Language::Java,
                include_str!(concat!("../data/snippets/java/", $id, ".java")),
            ),
            (
                Language::Cpp,
                include_str!(concat!("../data/snippets/cpp/", $id, ".cpp")),
            ),
        ]
    };
}

#[allow(clippy::too_many_arguments)]
fn spec(
    id: &str,
    display_index: u32,
    input_type: ValueType,
    output_type: ValueType,
    length_effect: LengthEffect,
    nl_text: &str,
    snippets: [(Language, &str); 3],
    test_vectors: Vec<(Value, Value)>,
) -> InstructionSpec {
    let code_snippets: BTreeMap<Language, String> = snippets
        .into_iter()
        .map(|(language, code)| (language, code.to_string()))
        .collect();
    InstructionSpec {
        id: id.to_string(),
        display_index,
        input_type,
        output_type,
        length_effect,
        nl_text: nl_text.to_string(),
        code_snippets,
        test_vectors,
    }
}

fn nn(input: i64, output: i64) -> (Value, Value) {
    (Value::number(input), Value::number(output))
}

fn nt(input: i64, output: &str) -> (Value, Value) {
    (Value::number(input), Value::text(output))
}

fn tt(input: &str, output: &str) -> (Value, Value) {
    (Value::text(input), Value::text(output))
}

fn tn(input: &str, output: i64) -> (Value, Value) {
    (Value::text(input), Value::number(output))
}

/// Metadata for the 22 built-ins, in display order.
pub fn specs() -> Vec<InstructionSpec> {
    use LengthEffect::{Expand, Neutral, Shrink};
    use ValueType::{Number, Text};
    vec![
        spec(
            "count2_base3",
            1,
            Number,
            Number,
            Shrink,
            "Take the previous number and output the amount of 2's in its base-3 representation then add multiply by 7 and add 3.",
            snippet_set!("count2_base3"),
            vec![nn(0, 3), nn(2, 10), nn(8, 17), nn(-8, 17)],
        ),
        spec(
            "invert_bits",
            2,
            Number,
            Number,
            Shrink,
            "Take the previous number, convert it to its binary representation using the smallest power of 2 that is greater than or equal to the number of bits required to represent it, treating it as an unsigned integer. Then, invert each bit, and output the result as an unsigned integer.",
            snippet_set!("invert_bits"),
            vec![nn(0, 1), nn(5, 10), nn(8, 7)],
        ),
        spec(
            "next_prime",
            3,
            Number,
            Number,
            Neutral,
            "Given the previous number, output the smallest number bigger than the previous answer that is a prime number.",
            snippet_set!("next_prime"),
            vec![nn(1, 2), nn(7, 11), nn(-10, 2), nn(13, 17)],
        ),
        spec(
            "next_perfect_square",
            4,
            Number,
            Number,
            Neutral,
            "Take the previous number and output the first perfect square that comes after it.",
            snippet_set!("next_perfect_square"),
            vec![nn(4, 9), nn(0, 1), nn(-3, 0), nn(9, 16)],
        ),
        spec(
            "digits_poly",
            5,
            Number,
            Number,
            Neutral,
            "Take the previous number and treat its digits as coefficients of a polynomial(MSB corresponds to largest power, LSB to the constant term). Calculate and output p(2).",
            snippet_set!("digits_poly"),
            vec![nn(405, 21), nn(0, 0), nn(-12, 4), nn(9999, 135)],
        ),
        spec(
            "abs_digit_letters",
            6,
            Number,
            Text,
            Expand,
            "Take the previous number, take its absolute value, and replace each digit with the corresponding letter in the lower cap alphabet and then upper cap, and 0 becomes the letter x(405->dDxXeE), and output the resulted string.",
            snippet_set!("abs_digit_letters"),
            vec![nt(405, "dDxXeE"), nt(0, "xX"), nt(-10, "aAxX")],
        ),
        spec(
            "digit_name_first_last",
            7,
            Number,
            Text,
            Expand,
            "Take the previous number, take its absolute value, and replace each digit with the first and last letters of its name in upper cap(103->OEZOTE), and output the resulted string.",
            snippet_set!("digit_name_first_last"),
            vec![nt(103, "OEZOTE"), nt(0, "ZO"), nt(87, "ETSN")],
        ),
        spec(
            "periodic_element",
            8,
            Number,
            Text,
            Neutral,
            "Take the previous number - let's call it num, calculate num mod 118, the result is a number i. Output the name of the i-th element in the periodic table(not 0-indexed).",
            snippet_set!("periodic_element"),
            vec![nt(1, "Hydrogen"), nt(26, "Iron"), nt(-1, "Tennessine"), nt(120, "Helium")],
        ),
        spec(
            "to_roman",
            9,
            Number,
            Text,
            Neutral,
            "Take the previous number: n, and write (n mod 10,000) in Roman numerals.",
            snippet_set!("to_roman"),
            vec![
                nt(1994, "MCMXCIV"),
                nt(4000, "MMMM"),
                nt(14, "XIV"),
                nt(3999, "MMMCMXCIX"),
                nt(9999, "MMMMMMMMMCMXCIX"),
                nt(12003, "MMIII"),
            ],
        ),
        spec(
            "weekday",
            10,
            Number,
            Text,
            Neutral,
            "Take the previous number n, and output the day of the week with index (n mod 7) - Sunday is the first day which its index is 0, in lower caps.",
            snippet_set!("weekday"),
            vec![nt(0, "sunday"), nt(13, "saturday"), nt(-1, "saturday")],
        ),
        spec(
            "alt_caps_reverse",
            11,
            Text,
            Text,
            Neutral,
            "Take the previous string, change the letters' caps to alternating caps starting with lower caps, and then reverse and output the resulted string.",
            snippet_set!("alt_caps_reverse"),
            vec![tt("AbCdE", "eDcBa"), tt("a-b", "b-a"), tt("hello", "oLlEh")],
        ),
        spec(
            "sort_ascii",
            12,
            Text,
            Text,
            Neutral,
            "Sort the previous string by ASCII order.",
            snippet_set!("sort_ascii"),
            vec![tt("cba", "abc"), tt("ba C", " Cab")],
        ),
        spec(
            "shift_back",
            13,
            Text,
            Text,
            Neutral,
            "Take the previous string and subtract 1 to each character, a becomes z.",
            snippet_set!("shift_back"),
            vec![tt("IBM", "HAL"), tt("aA zZ", "zZ yY")],
        ),
        spec(
            "bump_every_second",
            14,
            Text,
            Text,
            Neutral,
            "Take the previous string, replace each second letter in the string with the next letter in the alphabet and output the resulted string.",
            snippet_set!("bump_every_second"),
            vec![tt("abcd", "acce"), tt("az", "aa"), tt("a1b", "a1b"), tt("aZ", "aA")],
        ),
        spec(
            "partition_before_m",
            15,
            Text,
            Text,
            Neutral,
            "Take the previous string, and move its characters such that each letter(regardless of lower/upper caps) that is before 'm' in alphabetical order should move to the start, and every letter after should move to the end. The order must remain - it should be stable.",
            snippet_set!("partition_before_m"),
            vec![tt("mango", "agmno"), tt("aXm-b", "abXm-")],
        ),
        spec(
            "surround",
            16,
            Text,
            Text,
            Expand,
            "Take the previous string and surround it with \"abcde\", \"edcba\": \"abcde\" is before and \"edcba\" is after.",
            snippet_set!("surround"),
            vec![tt("x", "abcdexedcba"), tt("", "abcdeedcba")],
        ),
        spec(
            "triple",
            17,
            Text,
            Text,
            Expand,
            "Take the previous string - let's call it s, and output the concatenation of s with itself two times s+s+s.",
            snippet_set!("triple"),
            vec![tt("ab", "ababab"), tt("", "")],
        ),
        spec(
            "caesar8",
            18,
            Text,
            Text,
            Neutral,
            "Take the previous string, encrypt it using Caesar Cipher with key=8 and output the result.",
            snippet_set!("caesar8"),
            vec![tt("abz", "ijh"), tt("XYZ", "FGH"), tt("a b", "i j")],
        ),
        spec(
            "vowels_gh",
            19,
            Text,
            Text,
            Expand,
            "Take the previous string and replace each vowel character(a,A,e,E,i,I,o,O,u,U) with \"gh\".",
            snippet_set!("vowels_gh"),
            vec![tt("aEiou", "ghghghghgh"), tt("xyz", "xyz"), tt("idea", "ghdghgh")],
        ),
        spec(
            "rotate_sorted_prefix",
            20,
            Text,
            Text,
            Neutral,
            "Take the previous string, find the longest prefix of the string where characters appear in non-decreasing lexicographic order, and move this prefix to the end of the string and output the resulted string.",
            snippet_set!("rotate_sorted_prefix"),
            vec![
                tt("abcab", "ababc"),
                tt("cba", "bac"),
                tt("abc", "abc"),
                tt("deab", "abde"),
                tt("", ""),
            ],
        ),
        spec(
            "alpha_sum",
            21,
            Text,
            Number,
            Shrink,
            "Take the previous string and output the sum of the alphabetical positions of only its alphabetical characters (A=1, B=2, ..., Z=26), upper/lower caps don't matter",
            snippet_set!("alpha_sum"),
            vec![tn("Ab-c", 6), tn("", 0), tn("IBM", 24)],
        ),
        spec(
            "ascii_sum",
            22,
            Text,
            Number,
            Shrink,
            "Take the previous string and output the sum of ASCII values of the string.",
            snippet_set!("ascii_sum"),
            vec![tn("ab", 195), tn("IBM", 216), tn("a b", 227)],
        ),
    ]
}
