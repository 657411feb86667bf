#!/usr/bin/env python3
# Copyright 2026 The Aksarakit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/rules/*.rules.

Codepoints are resolved through unicodedata.lookup by character name, so the
emitted tables cannot drift from the standard. The Lampung script is not in
Unicode; its table targets a documented private-use-area layout instead.
The generated files are frozen in the repository.
"""

import os
import unicodedata

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "rules")

VOWEL_KEYS = ["a", "i", "u", "e", "o"]


def L(name):
    return unicodedata.lookup(name)


def make_syllables(consonants, vowel_signs, virama):
    """consonants: {latin: aksara}; vowel_signs: {latin vowel: sign or ''}."""
    to_native = []
    for latin, aksara in consonants.items():
        for v in VOWEL_KEYS:
            to_native.append((latin + v, aksara + vowel_signs[v]))
        to_native.append((latin, aksara + virama))
    return to_native


def write_rules(path, script, direction, rules):
    seen = set()
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"script: {script}\n")
        f.write(f"direction: {direction}\n")
        for src, dst in rules:
            assert src not in seen, f"duplicate source {src!r} in {path}"
            seen.add(src)
            f.write(f"{src}\t{dst}\n")


def write_script_rules(path, script, virama, consonant_ranges, joiner_ranges=()):
    def fmt(r):
        lo, hi = r
        if lo == hi:
            return f"U+{lo:04X}"
        return f"U+{lo:04X}..U+{hi:04X}"

    with open(path, "w", encoding="utf-8") as f:
        f.write(f"script: {script}\n")
        f.write(f"virama\t{fmt((virama, virama))}\n")
        for r in consonant_ranges:
            f.write(f"consonant\t{fmt(r)}\n")
        for r in joiner_ranges:
            f.write(f"joiner\t{fmt(r)}\n")


def emit(script, consonants, vowel_signs, independents, virama, digits_zero,
         consonant_ranges, joiner_ranges=(), extra_to_native=(), extra_to_latin=()):
    to_native = make_syllables(consonants, vowel_signs, virama)
    to_native += list(independents.items())
    for d in range(10):
        to_native.append((str(d), chr(ord(digits_zero) + d)))
    to_native.append((" ", " "))
    to_native += list(extra_to_native)

    to_latin = []
    for latin, aksara in consonants.items():
        for v in VOWEL_KEYS:
            sign = vowel_signs[v]
            if v == "a":
                to_latin.append((aksara, latin + "a"))
            else:
                to_latin.append((aksara + sign, latin + v))
        to_latin.append((aksara + virama, latin))
    for latin, aksara in independents.items():
        to_latin.append((aksara, latin))
    for d in range(10):
        to_latin.append((chr(ord(digits_zero) + d), str(d)))
    to_latin.append((" ", " "))
    to_latin += list(extra_to_latin)

    write_rules(os.path.join(OUT, f"{script}_to_aksara.rules"), script, "to_aksara", to_native)
    write_rules(os.path.join(OUT, f"{script}_to_latin.rules"), script, "to_latin", to_latin)
    write_script_rules(os.path.join(OUT, f"{script}_script.rules"), script,
                       ord(virama), consonant_ranges, joiner_ranges)


def javanese():
    C = {
        "h": L("JAVANESE LETTER HA"), "n": L("JAVANESE LETTER NA"),
        "c": L("JAVANESE LETTER CA"), "r": L("JAVANESE LETTER RA"),
        "k": L("JAVANESE LETTER KA"), "d": L("JAVANESE LETTER DA"),
        "t": L("JAVANESE LETTER TA"), "s": L("JAVANESE LETTER SA"),
        "w": L("JAVANESE LETTER WA"), "l": L("JAVANESE LETTER LA"),
        "p": L("JAVANESE LETTER PA"), "dh": L("JAVANESE LETTER DDA"),
        "j": L("JAVANESE LETTER JA"), "y": L("JAVANESE LETTER YA"),
        "ny": L("JAVANESE LETTER NYA"), "m": L("JAVANESE LETTER MA"),
        "g": L("JAVANESE LETTER GA"), "b": L("JAVANESE LETTER BA"),
        "th": L("JAVANESE LETTER TTA"), "ng": L("JAVANESE LETTER NGA"),
    }
    V = {
        "a": "", "i": L("JAVANESE VOWEL SIGN WULU"),
        "u": L("JAVANESE VOWEL SIGN SUKU"), "e": L("JAVANESE VOWEL SIGN TALING"),
        "o": L("JAVANESE VOWEL SIGN TALING") + L("JAVANESE VOWEL SIGN TARUNG"),
    }
    I = {
        "a": L("JAVANESE LETTER A"), "i": L("JAVANESE LETTER I"),
        "u": L("JAVANESE LETTER U"), "e": L("JAVANESE LETTER E"),
        "o": L("JAVANESE LETTER O"),
    }
    virama = L("JAVANESE PANGKON")
    # Colonial-era digraphs normalize through the native script: dj -> j,
    # tj -> c, so "djarwa" canonicalizes to "jarwa".
    extra = []
    for old, new in (("dj", "j"), ("tj", "c")):
        for v in VOWEL_KEYS:
            extra.append((old + v, C[new] + V[v]))
        extra.append((old, C[new] + virama))
    emit("jav", C, V, I, virama, L("JAVANESE DIGIT ZERO"),
         [(0xA98F, 0xA9B2)], extra_to_native=extra)


def balinese():
    C = {
        "h": L("BALINESE LETTER HA"), "n": L("BALINESE LETTER NA"),
        "c": L("BALINESE LETTER CA"), "r": L("BALINESE LETTER RA"),
        "k": L("BALINESE LETTER KA"), "d": L("BALINESE LETTER DA"),
        "t": L("BALINESE LETTER TA"), "s": L("BALINESE LETTER SA"),
        "w": L("BALINESE LETTER WA"), "l": L("BALINESE LETTER LA"),
        "p": L("BALINESE LETTER PA"), "j": L("BALINESE LETTER JA"),
        "y": L("BALINESE LETTER YA"), "ny": L("BALINESE LETTER NYA"),
        "m": L("BALINESE LETTER MA"), "g": L("BALINESE LETTER GA"),
        "b": L("BALINESE LETTER BA"), "ng": L("BALINESE LETTER NGA"),
    }
    V = {
        "a": "", "i": L("BALINESE VOWEL SIGN ULU"),
        "u": L("BALINESE VOWEL SIGN SUKU"), "e": L("BALINESE VOWEL SIGN TALING"),
        "o": L("BALINESE VOWEL SIGN TALING TEDUNG"),
    }
    I = {
        "a": L("BALINESE LETTER AKARA"), "i": L("BALINESE LETTER IKARA"),
        "u": L("BALINESE LETTER UKARA"), "e": L("BALINESE LETTER EKARA"),
        "o": L("BALINESE LETTER OKARA"),
    }
    emit("ban", C, V, I, L("BALINESE ADEG ADEG"), L("BALINESE DIGIT ZERO"),
         [(0x1B13, 0x1B33)])


def sundanese():
    C = {
        "k": L("SUNDANESE LETTER KA"), "g": L("SUNDANESE LETTER GA"),
        "ng": L("SUNDANESE LETTER NGA"), "c": L("SUNDANESE LETTER CA"),
        "j": L("SUNDANESE LETTER JA"), "ny": L("SUNDANESE LETTER NYA"),
        "t": L("SUNDANESE LETTER TA"), "d": L("SUNDANESE LETTER DA"),
        "n": L("SUNDANESE LETTER NA"), "p": L("SUNDANESE LETTER PA"),
        "b": L("SUNDANESE LETTER BA"), "m": L("SUNDANESE LETTER MA"),
        "y": L("SUNDANESE LETTER YA"), "r": L("SUNDANESE LETTER RA"),
        "l": L("SUNDANESE LETTER LA"), "w": L("SUNDANESE LETTER WA"),
        "s": L("SUNDANESE LETTER SA"), "h": L("SUNDANESE LETTER HA"),
    }
    V = {
        "a": "", "i": L("SUNDANESE VOWEL SIGN PANGHULU"),
        "u": L("SUNDANESE VOWEL SIGN PANYUKU"),
        "e": L("SUNDANESE VOWEL SIGN PANAELAENG"),
        "o": L("SUNDANESE VOWEL SIGN PANOLONG"),
    }
    I = {
        "a": L("SUNDANESE LETTER A"), "i": L("SUNDANESE LETTER I"),
        "u": L("SUNDANESE LETTER U"), "e": L("SUNDANESE LETTER E"),
        "o": L("SUNDANESE LETTER O"),
    }
    emit("sun", C, V, I, L("SUNDANESE SIGN PAMAAEH"), L("SUNDANESE DIGIT ZERO"),
         [(0x1B8A, 0x1BA0)])


def lampung():
    # Had Lampung is not encoded in Unicode; rendering it takes a custom font,
    # so the table targets a private-use-area layout: consonants U+E000..,
    # signs U+E020.., the vowel killer (nengen) at U+E02A. PUA codepoints
    # carry no combining properties, so the script rules declare the sign
    # range as joiners.
    order = ["k", "g", "ng", "p", "b", "m", "t", "d", "n", "c",
             "j", "ny", "y", "a", "l", "r", "s", "w", "h", "gh"]
    C = {latin: chr(0xE000 + i) for i, latin in enumerate(order) if latin != "a"}
    carrier = chr(0xE000 + order.index("a"))
    V = {"a": "", "i": chr(0xE020), "u": chr(0xE021), "e": chr(0xE022), "o": chr(0xE023)}
    nengen = chr(0xE02A)

    to_native = make_syllables(C, V, nengen)
    to_native.append(("a", carrier))
    for v in ("i", "u", "e", "o"):
        to_native.append((v, carrier + V[v]))
    to_native.append((" ", " "))

    to_latin = []
    for latin, aksara in C.items():
        for v in VOWEL_KEYS:
            if v == "a":
                to_latin.append((aksara, latin + "a"))
            else:
                to_latin.append((aksara + V[v], latin + v))
        to_latin.append((aksara + nengen, latin))
    to_latin.append((carrier, "a"))
    for v in ("i", "u", "e", "o"):
        to_latin.append((carrier + V[v], v))
    to_latin.append((" ", " "))

    write_rules(os.path.join(OUT, "ljp_to_aksara.rules"), "ljp", "to_aksara", to_native)
    write_rules(os.path.join(OUT, "ljp_to_latin.rules"), "ljp", "to_latin", to_latin)
    write_script_rules(os.path.join(OUT, "ljp_script.rules"), "ljp",
                       0xE02A, [(0xE000, 0xE013)], [(0xE020, 0xE02A)])


def main():
    os.makedirs(OUT, exist_ok=True)
    javanese()
    balinese()
    sundanese()
    lampung()
    print("wrote rule tables to", os.path.abspath(OUT))


if __name__ == "__main__":
    main()
