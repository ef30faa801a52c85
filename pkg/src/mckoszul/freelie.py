"""Free graded Lie algebras inside the tensor algebra.

Elements live in the free associative algebra as commutator
combinations; the spanning set is the bracketed Lyndon words over the
ordered generator alphabet, together with [b, b] for each Lyndon
bracketing b of odd total degree (an independent weight-doubled basis
element in the graded setting).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .graded import GradedSpace, Vec

WORD_SEP = "*"


def word_label(word: tuple[str, ...]) -> str:
    return WORD_SEP.join(word)


def split_word(label: str) -> tuple[str, ...]:
    return tuple(label.split(WORD_SEP))


def lyndon_words(n_letters: int, max_len: int) -> list[tuple[int, ...]]:
    """All Lyndon words of length <= max_len over 0..n_letters-1, by
    Duval's generation, ordered by (length, lexicographic)."""
    out: list[tuple[int, ...]] = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m <= max_len:
            out.append(tuple(w))
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == n_letters - 1:
            w.pop()
    return sorted(out, key=lambda t: (len(t), t))


def standard_factorization(word: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """w = u.v with v the longest proper Lyndon suffix."""
    assert len(word) >= 2
    n = max(word) + 1
    lynset = {tuple(w) for w in lyndon_words(n, len(word))}
    for i in range(1, len(word)):
        if word[i:] in lynset:
            return word[:i], word[i:]
    raise ValueError(f"{word} has no Lyndon factorization (not a Lyndon word?)")


@dataclass(frozen=True)
class LieBasisElement:
    label: str                  # bracket expression, e.g. "[x,[x,y]]"
    weight: int
    degree: int
    expansion: Vec              # over tensor-word labels


class FreeLieBasis:
    """The super-Lyndon spanning basis of the free graded Lie algebra on
    a graded generator space, up to a weight bound."""

    def __init__(self, gens: GradedSpace, max_weight: int):
        self.gens = gens
        self.max_weight = max_weight
        self.alphabet = gens.labels()
        self.elements: list[LieBasisElement] = []
        n = len(self.alphabet)
        if n == 0 or max_weight < 1:
            return

        def letter(i: int) -> str:
            return self.alphabet[i]

        def tensor_bracket(x: Vec, y: Vec, dx: int, dy: int) -> Vec:
            out = Vec()
            for wx, cx in x.items():
                tx = split_word(wx) if wx else ()
                for wy, cy in y.items():
                    ty = split_word(wy) if wy else ()
                    out = out + Vec({word_label(tx + ty): cx * cy})
                    sign = -1 if (dx % 2 and dy % 2) else 1
                    out = out + Vec({word_label(ty + tx): -sign * cx * cy})
            return out

        expansions: dict[tuple[int, ...], tuple[Vec, int]] = {}

        def expand(word: tuple[int, ...]) -> tuple[Vec, int]:
            if word in expansions:
                return expansions[word]
            if len(word) == 1:
                v = Vec.basis(letter(word[0]))
                deg = gens.degree_of(letter(word[0]))
            else:
                u, w = standard_factorization(word)
                vu, du = expand(u)
                vw, dw = expand(w)
                v = tensor_bracket(vu, vw, du, dw)
                deg = du + dw
            expansions[word] = (v, deg)
            return v, deg

        def bracket_label(word: tuple[int, ...]) -> str:
            if len(word) == 1:
                return letter(word[0])
            u, w = standard_factorization(word)
            return f"[{bracket_label(u)},{bracket_label(w)}]"

        for word in lyndon_words(n, max_weight):
            expansion, degree = expand(word)
            self.elements.append(
                LieBasisElement(bracket_label(word), len(word), degree, expansion))
        # squares of odd elements
        for word in lyndon_words(n, max_weight // 2):
            expansion, degree = expand(word)
            if degree % 2 == 1:
                sq = tensor_bracket(expansion, expansion, degree, degree)
                lbl = bracket_label(word)
                self.elements.append(
                    LieBasisElement(f"[{lbl},{lbl}]", 2 * len(word), 2 * degree, sq))
        self.elements.sort(key=lambda e: (e.weight, e.label))

    def up_to_weight(self, w: int) -> list[LieBasisElement]:
        return [e for e in self.elements if e.weight <= w]

    def weight_block(self, w: int) -> list[LieBasisElement]:
        return [e for e in self.elements if e.weight == w]

    def rewrite(self, v: Vec, weight: int) -> Vec | None:
        """Coordinates of a weight-homogeneous tensor element in the Lie
        basis of that weight, or None when v is outside the Lie span."""
        block = self.weight_block(weight)
        words = sorted({w for e in block for w in e.expansion.labels()}
                       | set(v.labels()))
        idx = {w: i for i, w in enumerate(words)}
        rows = []
        for e in block:
            row = [Fraction(0)] * len(words)
            for w, c in e.expansion.items():
                row[idx[w]] = c
            rows.append(row)
        target = [Fraction(0)] * len(words)
        for w, c in v.items():
            target[idx[w]] = c
        coords = linalg.coordinates_in_span(rows, target)
        if coords is None:
            return None
        return Vec((block[i].label, c) for i, c in enumerate(coords))

    def in_lie_span(self, v: Vec, weight: int) -> bool:
        return self.rewrite(v, weight) is not None
