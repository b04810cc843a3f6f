"""
Binary words
Classification into T1-T4, factor sets, and the splits the gadget builders use
"""

from dataclasses import dataclass
from enum import Enum
from itertools import groupby, product
from typing import Iterator, List, Set, Tuple

from src.utils.errors import ParseError, PreconditionError

ALPHABET = "ab"


class WordClass(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"


def parse_word(text: str) -> str:
    """Validate a word over {a, b}; surrounding whitespace is ignored"""
    word = text.strip()
    bad = sorted(set(word) - set(ALPHABET))
    if bad:
        raise ParseError(f"Word {text!r} contains letters outside {{a, b}}: {', '.join(bad)}")
    return word


def other_letter(letter: str) -> str:
    return "b" if letter == "a" else "a"


def swap_letters(w: str) -> str:
    """Mirror a <-> b"""
    return w.translate(str.maketrans("ab", "ba"))


def runs(w: str) -> List[Tuple[str, int]]:
    """Maximal letter blocks as (letter, length) pairs"""
    return [(letter, len(list(block))) for letter, block in groupby(w)]


def classify(w: str) -> WordClass:
    """
    Place a word in the T1-T4 partition

    T1: x^k (k >= 0); T2: x^k y (k >= 1); T3: x^l y^k (l >= 1, k >= 2);
    T4: everything else (three or more runs).
    """
    blocks = runs(w)
    if len(blocks) <= 1:
        return WordClass.T1
    if len(blocks) == 2:
        return WordClass.T2 if blocks[1][1] == 1 else WordClass.T3
    return WordClass.T4


def prefixes(w: str) -> Set[str]:
    return {w[:i] for i in range(len(w) + 1)}


def suffixes(w: str) -> Set[str]:
    return {w[i:] for i in range(len(w) + 1)}


def factors(w: str) -> Set[str]:
    found = {""}
    for start in range(len(w)):
        for end in range(start + 1, len(w) + 1):
            found.add(w[start:end])
    return found


def all_words(max_len: int, min_len: int = 0) -> Iterator[str]:
    """Every word over {a, b} by length, then lexicographically"""
    for length in range(min_len, max_len + 1):
        for letters in product(ALPHABET, repeat=length):
            yield "".join(letters)


def theorem10_applicable(w: str) -> bool:
    """
    Literal incompleteness predicate for T4 words

    True when w starts and ends with the same letter x, or when it does
    not and some k, l >= 1 give x^k y^l x as a factor with neither x^(k+1)
    nor y^(l+1) a factor. No maximality constraint is added.
    """
    if classify(w) != WordClass.T4:
        raise PreconditionError(f"Word {w!r} is not in T4")
    x = w[0]
    if w[-1] == x:
        return True

    y = other_letter(x)
    found = factors(w)
    for k in range(1, len(w) + 1):
        if x * (k + 1) in found:
            continue
        for l in range(1, len(w) + 1):
            if y * (l + 1) in found:
                continue
            if x * k + y * l + x in found:
                return True
    return False


@dataclass(frozen=True)
class CoreSplit:
    """w = u . core, where core is x y^k or x y^k x^l in letters a, b after mirroring"""
    prefix_length: int
    k: int
    l: int
    swapped: bool


def t3_core(w: str) -> CoreSplit:
    """
    Split a T3 word x^l y^k into x^(l-1) . x y^k

    The core is a b^k when swapped is False, b a^k otherwise; l is 0.
    """
    if classify(w) != WordClass.T3:
        raise PreconditionError(f"Word {w!r} is not in T3")
    (first, head), (_second, tail) = runs(w)
    return CoreSplit(prefix_length=head - 1, k=tail, l=0, swapped=first == "b")


def t4_core(w: str) -> CoreSplit:
    """
    Split a T4 word at its last three runs y^j x^k y^l into u . y x^k y^l

    After mirroring (swapped when y is b) the core reads a b^k a^l.
    """
    if classify(w) != WordClass.T4:
        raise PreconditionError(f"Word {w!r} is not in T4")
    blocks = runs(w)
    (y, _j), (_x, k), (_y, l) = blocks[-3:]
    return CoreSplit(prefix_length=len(w) - (1 + k + l), k=k, l=l, swapped=y == "b")


def class_note(cls: WordClass) -> str:
    """Complexity status of SRCW for a word class"""
    if cls in (WordClass.T1, WordClass.T2):
        return "polynomial"
    return "NP-complete in general"
