//! Independent reference implementations for the acceptance suite.
//!
//! Everything in this module recomputes a library result through a
//! deliberately different route: string-based radix work instead of
//! arithmetic digit loops, trial division instead of Miller-Rabin,
//! positional numeral tables instead of greedy subtraction, duplicated
//! literal tables instead of the shipped data files, and a hand-rolled
//! substring scanner instead of the regex tag parser. A bug that slipped
//! into both routes would have to be made twice, in two shapes.

use std::collections::BTreeMap;

use chainbench::Value;
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

// -- duplicated literal tables -----------------------------------------------

const DIGIT_LETTER_PAIRS: [&str; 10] = ["xX", "aA", "bB", "cC", "dD", "eE", "fF", "gG", "hH", "iI"];

const DIGIT_NAMES: [&str; 10] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
];

const DAY_NAMES: [&str; 7] = [
    "sunday",
    "monday",
    "tuesday",
    "wednesday",
    "thursday",
    "friday",
    "saturday",
];

const ROMAN_ONES: [&str; 10] = ["", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"];
const ROMAN_TENS: [&str; 10] = ["", "X", "XX", "XXX", "XL", "L", "LX", "LXX", "LXXX", "XC"];
const ROMAN_HUNDREDS: [&str; 10] = ["", "C", "CC", "CCC", "CD", "D", "DC", "DCC", "DCCC", "CM"];

const ELEMENT_NAMES: [&str; 118] = [
    "Hydrogen",
    "Helium",
    "Lithium",
    "Beryllium",
    "Boron",
    "Carbon",
    "Nitrogen",
    "Oxygen",
    "Fluorine",
    "Neon",
    "Sodium",
    "Magnesium",
    "Aluminium",
    "Silicon",
    "Phosphorus",
    "Sulfur",
    "Chlorine",
    "Argon",
    "Potassium",
    "Calcium",
    "Scandium",
    "Titanium",
    "Vanadium",
    "Chromium",
    "Manganese",
    "Iron",
    "Cobalt",
    "Nickel",
    "Copper",
    "Zinc",
    "Gallium",
    "Germanium",
    "Arsenic",
    "Selenium",
    "Bromine",
    "Krypton",
    "Rubidium",
    "Strontium",
    "Yttrium",
    "Zirconium",
    "Niobium",
    "Molybdenum",
    "Technetium",
    "Ruthenium",
    "Rhodium",
    "Palladium",
    "Silver",
    "Cadmium",
    "Indium",
    "Tin",
    "Antimony",
    "Tellurium",
    "Iodine",
    "Xenon",
    "Caesium",
    "Barium",
    "Lanthanum",
    "Cerium",
    "Praseodymium",
    "Neodymium",
    "Promethium",
    "Samarium",
    "Europium",
    "Gadolinium",
    "Terbium",
    "Dysprosium",
    "Holmium",
    "Erbium",
    "Thulium",
    "Ytterbium",
    "Lutetium",
    "Hafnium",
    "Tantalum",
    "Tungsten",
    "Rhenium",
    "Osmium",
    "Iridium",
    "Platinum",
    "Gold",
    "Mercury",
    "Thallium",
    "Lead",
    "Bismuth",
    "Polonium",
    "Astatine",
    "Radon",
    "Francium",
    "Radium",
    "Actinium",
    "Thorium",
    "Protactinium",
    "Uranium",
    "Neptunium",
    "Plutonium",
    "Americium",
    "Curium",
    "Berkelium",
    "Californium",
    "Einsteinium",
    "Fermium",
    "Mendelevium",
    "Nobelium",
    "Lawrencium",
    "Rutherfordium",
    "Dubnium",
    "Seaborgium",
    "Bohrium",
    "Hassium",
    "Meitnerium",
    "Darmstadtium",
    "Roentgenium",
    "Copernicium",
    "Nihonium",
    "Flerovium",
    "Moscovium",
    "Livermorium",
    "Tennessine",
    "Oganesson",
];

// -- number helpers -----------------------------------------------------------

fn magnitude(n: &BigInt) -> BigUint {
    n.magnitude().clone()
}

fn floor_mod(n: &BigInt, modulus: i64) -> i64 {
    let m = BigInt::from(modulus);
    let r = n % &m;
    let r = if r.sign() == num_bigint::Sign::Minus {
        r + &m
    } else {
        r
    };
    r.to_i64().expect("residue fits i64")
}

// -- number -> number ----------------------------------------------------------

fn count2_base3(n: &BigInt) -> BigInt {
    let ternary = magnitude(n).to_str_radix(3);
    let twos = ternary.chars().filter(|c| *c == '2').count();
    BigInt::from(twos * 7 + 3)
}

fn invert_bits(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "inputs are drawn non-negative");
    let binary = magnitude(n).to_str_radix(2);
    let width = binary.len().next_power_of_two();
    let padded = format!("{}{}", "0".repeat(width - binary.len()), binary);
    let flipped: String = padded
        .chars()
        .map(|bit| if bit == '0' { '1' } else { '0' })
        .collect();
    BigInt::parse_bytes(flipped.as_bytes(), 2).expect("flipped bits parse")
}

fn next_prime(n: &BigInt) -> BigInt {
    let n = n.to_i64().expect("inputs are drawn within i64");
    let mut candidate = (n + 1).max(2);
    while !is_prime_by_trial_division(candidate) {
        candidate += 1;
    }
    BigInt::from(candidate)
}

fn is_prime_by_trial_division(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn next_perfect_square(n: &BigInt) -> BigInt {
    if n.is_negative() {
        return BigInt::zero();
    }
    // Binary search for the integer square root.
    let mut lo = BigInt::zero();
    let mut hi = n.clone() + 1;
    while lo < hi {
        let mid: BigInt = (&lo + &hi + 1) / 2;
        if &mid * &mid <= *n {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let next_root = lo + 1;
    &next_root * &next_root
}

fn digits_poly(n: &BigInt) -> BigInt {
    let decimal = magnitude(n).to_string();
    let top = decimal.len() - 1;
    let mut sum = BigInt::zero();
    for (i, digit) in decimal.chars().enumerate() {
        let d = digit.to_digit(10).expect("decimal digit");
        sum += BigInt::from(d) * BigInt::from(2u32).pow((top - i) as u32);
    }
    sum
}

// -- number -> text ------------------------------------------------------------

fn abs_digit_letters(n: &BigInt) -> String {
    let mut out = String::new();
    for digit in magnitude(n).to_string().chars() {
        out.push_str(DIGIT_LETTER_PAIRS[digit.to_digit(10).expect("digit") as usize]);
    }
    out
}

fn digit_name_first_last(n: &BigInt) -> String {
    let mut out = String::new();
    for digit in magnitude(n).to_string().chars() {
        let name = DIGIT_NAMES[digit.to_digit(10).expect("digit") as usize];
        let first = name.chars().next().expect("nonempty name");
        let last = name.chars().last().expect("nonempty name");
        out.push(first.to_ascii_uppercase());
        out.push(last.to_ascii_uppercase());
    }
    out
}

fn periodic_element(n: &BigInt) -> String {
    let i = floor_mod(n, 118);
    assert!(i != 0, "inputs are drawn off the zero residue");
    ELEMENT_NAMES[i as usize - 1].to_string()
}

fn to_roman(n: &BigInt) -> String {
    let m = floor_mod(n, 10000);
    assert!(m != 0, "inputs are drawn off the zero residue");
    let mut out = String::new();
    for _ in 0..m / 1000 {
        out.push('M');
    }
    out.push_str(ROMAN_HUNDREDS[(m / 100 % 10) as usize]);
    out.push_str(ROMAN_TENS[(m / 10 % 10) as usize]);
    out.push_str(ROMAN_ONES[(m % 10) as usize]);
    out
}

fn weekday(n: &BigInt) -> String {
    DAY_NAMES[floor_mod(n, 7) as usize].to_string()
}

// -- text -> text ---------------------------------------------------------------

const LOWER: &str = "abcdefghijklmnopqrstuvwxyz";
const UPPER: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";

fn rotate_letter(c: char, offset: usize) -> char {
    if let Some(i) = LOWER.find(c) {
        LOWER.as_bytes()[(i + offset) % 26] as char
    } else if let Some(i) = UPPER.find(c) {
        UPPER.as_bytes()[(i + offset) % 26] as char
    } else {
        c
    }
}

fn alt_caps_reverse(s: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::new();
    for i in (0..chars.len()).rev() {
        if i % 2 == 0 {
            out.extend(chars[i].to_lowercase());
        } else {
            out.extend(chars[i].to_uppercase());
        }
    }
    out
}

fn sort_ascii(s: &str) -> String {
    assert!(s.is_ascii(), "inputs are drawn as printable ASCII");
    let mut buckets = [0usize; 128];
    for b in s.bytes() {
        buckets[b as usize] += 1;
    }
    let mut out = String::new();
    for (code, count) in buckets.iter().enumerate() {
        for _ in 0..*count {
            out.push(code as u8 as char);
        }
    }
    out
}

fn shift_back(s: &str) -> String {
    s.chars().map(|c| rotate_letter(c, 25)).collect()
}

fn bump_every_second(s: &str) -> String {
    s.chars()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { rotate_letter(c, 1) } else { c })
        .collect()
}

fn partition_before_m(s: &str) -> String {
    let early = |c: char| matches!(c, 'a'..='l' | 'A'..='L');
    let mut out = String::new();
    for c in s.chars().filter(|c| early(*c)) {
        out.push(c);
    }
    for c in s.chars().filter(|c| !early(*c)) {
        out.push(c);
    }
    out
}

fn surround(s: &str) -> String {
    let mirrored: String = "abcde".chars().rev().collect();
    format!("abcde{s}{mirrored}")
}

fn triple(s: &str) -> String {
    let mut out = String::new();
    for _ in 0..3 {
        out.push_str(s);
    }
    out
}

fn caesar8(s: &str) -> String {
    s.chars().map(|c| rotate_letter(c, 8)).collect()
}

fn vowels_gh(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            'a' | 'A' | 'e' | 'E' | 'i' | 'I' | 'o' | 'O' | 'u' | 'U' => out.push_str("gh"),
            other => out.push(other),
        }
    }
    out
}

fn rotate_sorted_prefix(s: &str) -> String {
    assert!(s.is_ascii(), "inputs are drawn as printable ASCII");
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return String::new();
    }
    let mut k = 1;
    while k < bytes.len() && bytes[k] >= bytes[k - 1] {
        k += 1;
    }
    format!("{}{}", &s[k..], &s[..k])
}

// -- text -> number ---------------------------------------------------------------

fn alpha_sum(s: &str) -> BigInt {
    let mut sum = 0u64;
    for c in s.chars() {
        if c.is_ascii_alphabetic() {
            sum += (c.to_ascii_lowercase() as u64) - ('a' as u64) + 1;
        }
    }
    BigInt::from(sum)
}

fn ascii_sum(s: &str) -> BigInt {
    assert!(s.is_ascii(), "inputs are drawn as printable ASCII");
    BigInt::from(s.bytes().map(u64::from).sum::<u64>())
}

// -- dispatch -----------------------------------------------------------------------

/// Recomputes the expected output of one built-in instruction.
///
/// Panics on an id or input type this module does not know, so a skipped
/// instruction is a loud failure rather than a silent pass.
pub fn reference(id: &str, input: &Value) -> Value {
    match (id, input) {
        ("count2_base3", Value::Number(n)) => Value::Number(count2_base3(n)),
        ("invert_bits", Value::Number(n)) => Value::Number(invert_bits(n)),
        ("next_prime", Value::Number(n)) => Value::Number(next_prime(n)),
        ("next_perfect_square", Value::Number(n)) => Value::Number(next_perfect_square(n)),
        ("digits_poly", Value::Number(n)) => Value::Number(digits_poly(n)),
        ("abs_digit_letters", Value::Number(n)) => Value::Text(abs_digit_letters(n)),
        ("digit_name_first_last", Value::Number(n)) => Value::Text(digit_name_first_last(n)),
        ("periodic_element", Value::Number(n)) => Value::Text(periodic_element(n)),
        ("to_roman", Value::Number(n)) => Value::Text(to_roman(n)),
        ("weekday", Value::Number(n)) => Value::Text(weekday(n)),
        ("alt_caps_reverse", Value::Text(s)) => Value::Text(alt_caps_reverse(s)),
        ("sort_ascii", Value::Text(s)) => Value::Text(sort_ascii(s)),
        ("shift_back", Value::Text(s)) => Value::Text(shift_back(s)),
        ("bump_every_second", Value::Text(s)) => Value::Text(bump_every_second(s)),
        ("partition_before_m", Value::Text(s)) => Value::Text(partition_before_m(s)),
        ("surround", Value::Text(s)) => Value::Text(surround(s)),
        ("triple", Value::Text(s)) => Value::Text(triple(s)),
        ("caesar8", Value::Text(s)) => Value::Text(caesar8(s)),
        ("vowels_gh", Value::Text(s)) => Value::Text(vowels_gh(s)),
        ("rotate_sorted_prefix", Value::Text(s)) => Value::Text(rotate_sorted_prefix(s)),
        ("alpha_sum", Value::Text(s)) => Value::Number(alpha_sum(s)),
        ("ascii_sum", Value::Text(s)) => Value::Number(ascii_sum(s)),
        (id, input) => panic!("no reference implementation for {id} on {input:?}"),
    }
}

// -- response scanning ----------------------------------------------------------------

/// Mirrors the library verdicts without serde interop, so comparisons are
/// by name only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NaiveVerdict {
    Correct,
    Wrong,
    Missing,
    TypeMismatch,
    Duplicate,
}

/// Scans a response text for answer tags by plain substring search.
///
/// Returns, per 1-based instruction index, the occurrence count and the
/// first tagged span. The walk replicates leftmost, non-overlapping
/// matching: a structurally complete tag (opener, digits, closing bracket,
/// closer) is consumed through its closer even when its index is out of
/// range, and a structurally broken opener only advances the scan by one
/// character.
pub fn scan_answers(text: &str, n: usize) -> BTreeMap<usize, (u32, String)> {
    let mut found: BTreeMap<usize, (u32, String)> = BTreeMap::new();
    let mut cursor = 0;
    while let Some(offset) = text[cursor..].find("[ANSWER][") {
        let opener = cursor + offset;
        let digits_start = opener + "[ANSWER][".len();
        let digits_len = text[digits_start..]
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        let digits_end = digits_start + digits_len;
        if digits_len == 0 || !text[digits_end..].starts_with(']') {
            cursor = opener + 1;
            continue;
        }
        let body_start = digits_end + 1;
        let closer = ["[\\ANSWER]", "[/ANSWER]"]
            .iter()
            .filter_map(|token| text[body_start..].find(token))
            .min();
        let Some(body_len) = closer else {
            cursor = opener + 1;
            continue;
        };
        let span = &text[body_start..body_start + body_len];
        cursor = body_start + body_len + "[\\ANSWER]".len();
        let Ok(index) = text[digits_start..digits_end].parse::<usize>() else {
            continue;
        };
        if index == 0 || index > n {
            continue;
        }
        let slot = found.entry(index).or_insert((0, span.to_string()));
        slot.0 += 1;
    }
    found
}

/// Strips one matching pair of surrounding quotes, if present.
fn unquote(span: &str) -> &str {
    let chars: Vec<char> = span.chars().collect();
    if chars.len() >= 2
        && (chars[0] == '"' || chars[0] == '\'')
        && chars[chars.len() - 1] == chars[0]
    {
        &span[1..span.len() - 1]
    } else {
        span
    }
}

/// Normalizes an optionally signed decimal string to a comparable form.
///
/// Returns `None` when the string is not an integer at all. The form is a
/// sign character plus the digits without leading zeros, with negative
/// zero folded into plain zero.
fn normalize_integer(s: &str) -> Option<String> {
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => ('-', rest),
        None => ('+', s.strip_prefix('+').unwrap_or(s)),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let trimmed = digits.trim_start_matches('0');
    let canonical = if trimmed.is_empty() { "0" } else { trimmed };
    let sign = if canonical == "0" { '+' } else { sign };
    Some(format!("{sign}{canonical}"))
}

/// Checks one tagged span against the expected value, independently of the
/// library comparator.
pub fn judge_span(span: &str, expected: &Value) -> NaiveVerdict {
    let content = unquote(span.trim());
    match expected {
        Value::Text(want) => {
            if content == want {
                NaiveVerdict::Correct
            } else {
                NaiveVerdict::Wrong
            }
        }
        Value::Number(_) => match normalize_integer(content) {
            None => NaiveVerdict::TypeMismatch,
            Some(candidate) => {
                let want = normalize_integer(&expected.render()).expect("rendered integer");
                if candidate == want {
                    NaiveVerdict::Correct
                } else {
                    NaiveVerdict::Wrong
                }
            }
        },
    }
}

/// Scores one prompt-mode response text against the expected outputs.
pub fn judge_response(text: &str, expected_outputs: &[Value]) -> Vec<NaiveVerdict> {
    let n = expected_outputs.len();
    let found = scan_answers(text, n);
    (1..=n)
        .map(|index| match found.get(&index) {
            None => NaiveVerdict::Missing,
            Some((count, _)) if *count > 1 => NaiveVerdict::Duplicate,
            Some((_, span)) => judge_span(span, &expected_outputs[index - 1]),
        })
        .collect()
}

/// Picks the dominant failure for one sample, by the fixed precedence.
pub fn dominant_failure(transport_error: bool, verdicts: &[NaiveVerdict]) -> Option<&'static str> {
    if transport_error {
        Some("transport_error")
    } else if verdicts.contains(&NaiveVerdict::Duplicate) {
        Some("duplicate_tags")
    } else if verdicts.contains(&NaiveVerdict::Missing) {
        Some("insufficient_answer")
    } else if verdicts.contains(&NaiveVerdict::TypeMismatch) {
        Some("type_mismatch")
    } else {
        None
    }
}
