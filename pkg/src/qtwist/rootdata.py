"""Finite-type root data, Weyl group elements and reduced words.

Weights are integer tuples in the fundamental-weight basis; root-lattice
elements are integer tuples in the simple-root basis.  Indices are 1-based
in user-facing words and 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np


class RootDatumError(ValueError):
    pass


@dataclass(frozen=True)
class RootDatum:
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    name: str = field(default="", compare=False)

    @property
    def rank(self) -> int:
        return len(self.symmetrizer)

    def a(self, i: int, j: int) -> int:
        return self.cartan[i][j]

    def d(self, i: int) -> int:
        return self.symmetrizer[i]

    # root-lattice pairings ------------------------------------------------
    def root_form(self, x, y) -> int:
        """(x, y) for x, y given in simple-root coordinates."""
        r = self.rank
        return sum(x[i] * y[j] * self.d(i) * self.cartan[i][j]
                   for i in range(r) if x[i] for j in range(r) if y[j])

    def coroot_pairing(self, i: int, x) -> int:
        """<h_i, x> for x in simple-root coordinates."""
        return sum(self.cartan[i][j] * x[j] for j in range(self.rank))

    def height(self, x) -> int:
        return sum(x)

    def unit(self, i: int) -> tuple[int, ...]:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    # weight lattice -----------------------------------------------------
    def root_to_weight(self, x) -> tuple[int, ...]:
        """Simple-root coordinates to fundamental-weight coordinates."""
        return tuple(self.coroot_pairing(i, x) for i in range(self.rank))

    @cached_property
    def _cartan_inv(self):
        from sympy import Matrix
        return Matrix(self.cartan).inv()

    def weight_to_root(self, lam) -> tuple[Fraction, ...]:
        """Fundamental-weight coordinates to (rational) simple-root ones."""
        inv = self._cartan_inv
        out = []
        for i in range(self.rank):
            s = sum(Fraction(int(inv[i, j].p), int(inv[i, j].q)) * lam[j]
                    for j in range(self.rank))
            out.append(s)
        return tuple(out)

    def weight_to_root_int(self, lam) -> tuple[int, ...]:
        out = self.weight_to_root(lam)
        if any(c.denominator != 1 for c in out):
            raise RootDatumError(f"weight {lam} is not in the root lattice")
        return tuple(int(c) for c in out)

    def pair_weight_root(self, lam, x) -> int:
        """(lam, x) with lam in weight coords and x in root coords."""
        return sum(lam[i] * self.d(i) * x[i] for i in range(self.rank))

    def weight_form(self, lam, mu) -> Fraction:
        """(lam, mu) with both in weight coordinates."""
        return sum((Fraction(self.d(i)) * lam[i] * c
                    for i, c in enumerate(self.weight_to_root(mu))),
                   Fraction(0))

    def fundamental(self, i: int) -> tuple[int, ...]:
        return self.unit(i)

    @property
    def rho(self) -> tuple[int, ...]:
        return (1,) * self.rank

    def is_dominant(self, lam) -> bool:
        return all(c >= 0 for c in lam)

    # Weyl group ---------------------------------------------------------
    def reflect_weight(self, i: int, lam) -> tuple[int, ...]:
        """s_i on weight coordinates: lam - <h_i, lam> alpha_i."""
        c = lam[i]
        return tuple(lam[j] - c * self.cartan[j][i] for j in range(self.rank))

    def reflect_root(self, i: int, x) -> tuple[int, ...]:
        c = self.coroot_pairing(i, x)
        return tuple(x[j] - (c if j == i else 0) for j in range(self.rank))

    def act_word_weight(self, word, lam) -> tuple[int, ...]:
        """(s_{w1} ... s_{wk}) lam, rightmost reflection first (0-based word)."""
        for i in reversed(word):
            lam = self.reflect_weight(i, lam)
        return tuple(lam)

    def act_word_root(self, word, x) -> tuple[int, ...]:
        for i in reversed(word):
            x = self.reflect_root(i, x)
        return tuple(x)

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        roots = {self.unit(i) for i in range(self.rank)}
        frontier = list(roots)
        while frontier:
            new = []
            for x in frontier:
                for i in range(self.rank):
                    y = self.reflect_root(i, x)
                    if all(c >= 0 for c in y) and y not in roots:
                        roots.add(y)
                        new.append(y)
            frontier = new
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    @cached_property
    def longest_word(self) -> tuple[int, ...]:
        """Lex-least reduced word of w0 (0-based)."""
        return self.element_from_word(self._w0_any()).word

    def _w0_any(self):
        word = []
        lam = self.rho
        while True:
            for i in range(self.rank):
                if lam[i] > 0:
                    lam = self.reflect_weight(i, lam)
                    word.append(i)
                    break
            else:
                return tuple(reversed(word))

    def element_from_word(self, word) -> "WeylElt":
        word = tuple(word)
        image = self.act_word_weight(word, self.rho)
        return WeylElt(self, _lex_least_word(self, image))

    def longest_element(self) -> "WeylElt":
        return self.element_from_word(self._w0_any())

    def identity(self) -> "WeylElt":
        return WeylElt(self, ())

    def kostant_partition(self, xi) -> int:
        """Number of ways to write xi (root coords) as a sum of positive roots."""
        return _kostant(self, tuple(xi))


@lru_cache(maxsize=None)
def _kostant(rd: RootDatum, xi: tuple[int, ...], start: int = 0) -> int:
    if all(c == 0 for c in xi):
        return 1
    if any(c < 0 for c in xi):
        return 0
    roots = rd.positive_roots
    total = 0
    for k in range(start, len(roots)):
        r = roots[k]
        rest = tuple(a - b for a, b in zip(xi, r))
        if all(c >= 0 for c in rest):
            total += _kostant(rd, rest, k)
    return total


def _lex_least_word(rd: RootDatum, image) -> tuple[int, ...]:
    """Lex-least reduced word for the element w with w(rho) = image.

    The first letter i of a reduced word satisfies <h_i, w rho> < 0, so the
    greedy choice of the smallest such i gives the lex-least word.
    """
    word = []
    lam = tuple(image)
    while True:
        for i in range(rd.rank):
            if lam[i] < 0:
                word.append(i)
                lam = rd.reflect_weight(i, lam)
                break
        else:
            return tuple(word)


@dataclass(frozen=True)
class WeylElt:
    rd: RootDatum
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, lam) -> tuple[int, ...]:
        return self.rd.act_word_weight(self.word, lam)

    def act_root(self, x) -> tuple[int, ...]:
        return self.rd.act_word_root(self.word, x)

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.rd.element_from_word(self.word + other.word)

    def inverse(self) -> "WeylElt":
        return self.rd.element_from_word(tuple(reversed(self.word)))

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.rd == other.rd and \
            self.act(self.rd.rho) == other.act(other.rd.rho)

    def __hash__(self):
        return hash((self.rd, self.act(self.rd.rho)))

    def one_based(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.word)


def build_root_datum(cartan, symmetrizer, name: str = "") -> RootDatum:
    A = tuple(tuple(int(c) for c in row) for row in cartan)
    d = tuple(int(c) for c in symmetrizer)
    r = len(d)
    if len(A) != r or any(len(row) != r for row in A):
        raise RootDatumError("Cartan matrix must be square of size len(d)")
    if any(c <= 0 for c in d):
        raise RootDatumError("symmetrizer entries must be positive")
    for i in range(r):
        if A[i][i] != 2:
            raise RootDatumError("diagonal entries must be 2")
        for j in range(r):
            if i != j:
                if A[i][j] > 0:
                    raise RootDatumError("off-diagonal entries must be <= 0")
                if (A[i][j] == 0) != (A[j][i] == 0):
                    raise RootDatumError("a_ij = 0 must match a_ji = 0")
                if d[i] * A[i][j] != d[j] * A[j][i]:
                    raise RootDatumError("D A is not symmetric")
    sym = np.array([[d[i] * A[i][j] for j in range(r)] for i in range(r)],
                   dtype=float)
    if r and np.linalg.eigvalsh(sym).min() <= 1e-9:
        raise RootDatumError("Cartan matrix is not of finite type")
    return RootDatum(A, d, name)


_TYPES = {
    "A1": ([[2]], [1]),
    "A2": ([[2, -1], [-1, 2]], [1, 1]),
    "A3": ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 1, 1]),
    "B2": ([[2, -1], [-2, 2]], [2, 1]),
    "G2": ([[2, -1], [-3, 2]], [3, 1]),
}


def cartan_type(name: str) -> RootDatum:
    key = name.strip().upper()
    if key not in _TYPES:
        raise RootDatumError(f"unknown type {name!r}; known: {sorted(_TYPES)}")
    A, d = _TYPES[key]
    return build_root_datum(A, d, key)


def sym_form(rd: RootDatum, x, y) -> Fraction:
    """(x, y) for weights in fundamental-weight coordinates."""
    return rd.weight_form(x, y)


def weyl_action(w: WeylElt, lam) -> tuple[int, ...]:
    return w.act(lam)


def is_reduced(rd: RootDatum, word) -> bool:
    return rd.element_from_word(word).length == len(tuple(word))


def enumerate_reduced_words(w: WeylElt) -> list[tuple[int, ...]]:
    """All reduced words of w (0-based), in lex order."""
    return sorted(_reduced_words(w.rd, w.act(w.rd.rho)))


@lru_cache(maxsize=None)
def _reduced_words(rd: RootDatum, image) -> tuple[tuple[int, ...], ...]:
    if all(c > 0 for c in image) and tuple(image) == rd.rho:
        return ((),)
    out = []
    for i in range(rd.rank):
        if image[i] < 0:
            for tail in _reduced_words(rd, rd.reflect_weight(i, image)):
                out.append((i,) + tail)
    return tuple(out)


def parse_word(text: str) -> tuple[int, ...]:
    """'1,2,1' -> (0, 1, 0)."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) - 1 for t in text.replace(" ", "").split(","))
