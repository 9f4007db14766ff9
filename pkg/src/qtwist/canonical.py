"""Dual canonical basis of U_q^-, crystal statistics and Demazure data.

Basis elements are produced weight by weight from the dual PBW basis of a
reduced word of w0: each F^up(c) is corrected by lex-smaller basis elements
with coefficients in qZ[q] until it is sigma-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct

from .config import check_height
from .pbw import pbw_exponents, pbw_norm_closed, pbw_vector
from .rootdata import RootDatum, WeylElt, enumerate_reduced_words
from .scalars import ONE, ZERO, Scalar
from .uqminus import NCElement, algebra, q_derivation, sigma, star


class CanonicalBasisError(ArithmeticError):
    pass


def positive_part(s: Scalar) -> Scalar:
    """Terms of a Laurent polynomial with strictly positive q-exponent."""
    out = ZERO
    for k, c in s.v_coeffs().items():
        if k > 0:
            out = out + Scalar.v_power(k, c)
    return out


def in_qzq(s: Scalar) -> bool:
    """s lies in qZ[q]."""
    if not s.is_integral_laurent():
        return False
    return all(k > 0 and k % 2 == 0 for k in s.v_coeffs())


class _WeightTable:
    """Dual PBW data and dual canonical elements for one degree and word."""

    def __init__(self, rd: RootDatum, word: tuple, xi: tuple):
        check_height(sum(xi))
        self.rd, self.word, self.xi = rd, word, xi
        sp = algebra(rd).space(xi)
        self.space = sp
        self.labels = pbw_exponents(rd, word, xi)
        if len(self.labels) != sp.dim:
            raise CanonicalBasisError(f"PBW count {len(self.labels)} != dim {sp.dim}")
        self.pos = {c: k for k, c in enumerate(self.labels)}
        self.low = []
        self.up = []
        for c in self.labels:
            low = pbw_vector(c, word, rd)
            self.low.append(sp.coords(low.terms))
            inv_norm = pbw_norm_closed(c, word, rd).inverse()
            self.up.append([x * inv_norm for x in self.low[-1]])
        self.norm = algebra(rd).norm_factor(xi)
        # rows of the Gram matrix applied to each F^low, so pairing is a dot product
        self.low_dual = []
        for low in self.low:
            row = []
            for i in range(sp.dim):
                acc = ZERO
                for j, y in enumerate(low):
                    if not y.is_zero() and not sp.gram[i][j].is_zero():
                        acc = acc + sp.gram[i][j] * y
                row.append(acc * self.norm)
            self.low_dual.append(row)
        self._solve()

    def pair(self, a, b) -> Scalar:
        return self.space.form_coords(a, b) * self.norm

    def up_coords(self, mono) -> list[Scalar]:
        """Coordinates in the F^up basis of a monomial-coordinate vector."""
        out = []
        for dual in self.low_dual:
            acc = ZERO
            for x, y in zip(mono, dual):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            out.append(acc)
        return out

    def _solve(self):
        n = len(self.labels)
        sp = self.space
        # g[k] = coordinates of G(c_k) in the F^up basis (unitriangular)
        g: list[list[Scalar]] = []
        for k, c in enumerate(self.labels):
            fup = NCElement(self.rd, sp.from_coords(self.up[k]))
            s = sigma(fup)
            lvec = self.up_coords(sp.coords(s.terms))
            lvec[k] = lvec[k] - ONE
            # express L in the G basis of the lower labels
            lg = [ZERO] * n
            for j in reversed(range(k + 1)):
                val = lvec[j]
                if val.is_zero():
                    continue
                if j == k:
                    raise CanonicalBasisError(f"{c}: sigma(F^up) has wrong leading term")
                lg[j] = val
                for t in range(j + 1):
                    if not g[j][t].is_zero():
                        lvec[t] = lvec[t] - val * g[j][t]
            h = [ZERO] * n
            for j in range(k):
                if lg[j].is_zero():
                    continue
                if not lg[j].is_integral_laurent():
                    raise CanonicalBasisError(f"{c}: non-integral correction {lg[j]}")
                if not (lg[j] + lg[j].bar()).is_zero():
                    raise CanonicalBasisError(f"{c}: correction is not bar-antisymmetric")
                h[j] = -positive_part(lg[j])
            vec = [ONE if t == k else ZERO for t in range(n)]
            for j in range(k):
                if h[j].is_zero():
                    continue
                for t in range(j + 1):
                    if not g[j][t].is_zero():
                        vec[t] = vec[t] - h[j] * g[j][t]
            g.append(vec)
        self.g = g
        self.mono = []
        for vec in g:
            acc = [ZERO] * sp.dim
            for t, a in enumerate(vec):
                if a.is_zero():
                    continue
                for m, x in enumerate(self.up[t]):
                    if not x.is_zero():
                        acc[m] = acc[m] + a * x
            self.mono.append(acc)

    def element(self, k) -> NCElement:
        return NCElement(self.rd, self.space.from_coords(self.mono[k]))

    def expand(self, mono) -> list[Scalar]:
        # F^up coordinates, then back-substitution through the unitriangular g
        coords = self.up_coords(mono)
        n = len(self.labels)
        out = [ZERO] * n
        for k in reversed(range(n)):
            a = coords[k]
            for j in range(k + 1, n):
                if not out[j].is_zero() and not self.g[j][k].is_zero():
                    a = a - out[j] * self.g[j][k]
            out[k] = a
        return out

    def check(self) -> dict[str, bool]:
        """(DCB1) sigma-invariance and (DCB2) qZ[q]-triangularity."""
        dcb1 = all(sigma(self.element(k)) == self.element(k) for k in range(len(self.labels)))
        dcb2 = True
        for k, vec in enumerate(self.g):
            for t, a in enumerate(vec):
                if t == k:
                    dcb2 &= a.is_one()
                elif t > k:
                    dcb2 &= a.is_zero()
                elif not a.is_zero():
                    dcb2 &= in_qzq(a)
        return {"DCB1": dcb1, "DCB2": dcb2}


@lru_cache(maxsize=None)
def _table(rd: RootDatum, word: tuple, xi: tuple) -> _WeightTable:
    return _WeightTable(rd, word, xi)


def reference_word(rd: RootDatum) -> tuple[int, ...]:
    return rd.longest_word


@dataclass(frozen=True)
class CrystalLabel:
    """b(c, i) for a reduced word i of w0 (0-based letters)."""

    rd: RootDatum = field(repr=False)
    word: tuple
    c: tuple

    @staticmethod
    def highest(rd: RootDatum, word=None) -> "CrystalLabel":
        word = tuple(word) if word is not None else reference_word(rd)
        return CrystalLabel(rd, word, (0,) * len(word))

    @staticmethod
    def star_of(rd: RootDatum, word, c) -> "CrystalLabel":
        """b_{-1}(c, i) = *b(c, i)."""
        return CrystalLabel(rd, tuple(word), tuple(c)).star()

    @property
    def degree(self) -> tuple[int, ...]:
        from .pbw import pbw_degree
        return pbw_degree(self.rd, self.c, self.word)

    @property
    def weight(self) -> tuple[int, ...]:
        """Weight in simple-root coordinates (non-positive)."""
        return tuple(-x for x in self.degree)

    def element(self) -> NCElement:
        return dual_canonical_element(self.c, self.word, self.rd)

    def epsilon(self, i: int, side: str = "left") -> int:
        return crystal_epsilon(i, self, side)

    def phi(self, i: int) -> int:
        return self.epsilon(i) + self.rd.coroot_pairing(i, self.weight)

    def relabel(self, word) -> "CrystalLabel":
        """The same basis element labelled through another reduced word of w0."""
        word = tuple(word)
        exp = dcb_expand(self.element(), word)
        (lab, coeff), = exp.items()
        if not coeff.is_one():
            raise CanonicalBasisError("relabel produced a non-basis coefficient")
        return lab

    def star(self) -> "CrystalLabel":
        exp = dcb_expand(star(self.element()), self.word)
        (lab, coeff), = exp.items()
        if not coeff.is_one():
            raise CanonicalBasisError("star does not permute the basis")
        return lab

    def one_based(self) -> dict:
        return {"word": [i + 1 for i in self.word], "c": list(self.c)}


def dual_canonical_element(c, word, rd: RootDatum) -> NCElement:
    """G^up(b(c, i))."""
    c, word = tuple(c), tuple(word)
    from .pbw import pbw_degree
    xi = pbw_degree(rd, c, word)
    tab = _table(rd, word, xi)
    return tab.element(tab.pos[c])


def dual_canonical_basis(rd: RootDatum, xi, word=None) -> list[tuple[CrystalLabel, NCElement]]:
    word = tuple(word) if word is not None else reference_word(rd)
    xi = tuple(xi)
    tab = _table(rd, word, xi)
    return [(CrystalLabel(rd, word, c), tab.element(k)) for k, c in enumerate(tab.labels)]


def check_dual_canonical(rd: RootDatum, xi, word=None) -> dict[str, bool]:
    word = tuple(word) if word is not None else reference_word(rd)
    return _table(rd, word, tuple(xi)).check()


def dcb_expand(x: NCElement, word=None) -> dict[CrystalLabel, Scalar]:
    """Coordinates of x in the dual canonical basis."""
    rd = x.rd
    word = tuple(word) if word is not None else reference_word(rd)
    out = {}
    for xi, mono in x.coords().items():
        tab = _table(rd, word, xi)
        for k, a in enumerate(tab.expand(mono)):
            if not a.is_zero():
                out[CrystalLabel(rd, word, tab.labels[k])] = a
    return out


def crystal_epsilon(i: int, b: CrystalLabel, side: str = "left") -> int:
    """Largest k with (e'_i)^k G^up(b) != 0 (side='left'), or with _i e' ('right')."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    x = b.element()
    k = 0
    while True:
        x = q_derivation(i, x, side)
        if x.is_zero():
            return k
        k += 1


def epsilon_vector(b: CrystalLabel, side: str = "left") -> tuple[int, ...]:
    return tuple(crystal_epsilon(i, b, side) for i in range(b.rd.rank))


def demazure_monomials(rd: RootDatum, word, xi) -> list[NCElement]:
    """f_{i_1}^{a_1} ... f_{i_l}^{a_l} of degree xi."""
    alg = algebra(rd)
    word = tuple(word)
    out = []
    bound = sum(xi)
    for a in iproduct(range(bound + 1), repeat=len(word)):
        deg = [0] * rd.rank
        for ak, i in zip(a, word):
            deg[i] += ak
        if tuple(deg) != tuple(xi):
            continue
        w = tuple(i for ak, i in zip(a, word) for _ in range(ak))
        out.append(alg.monomial(w))
    return out


def demazure_membership(b: CrystalLabel, w: WeylElt, word=None) -> bool:
    """b lies in B_w(infinity)."""
    from .uqminus import lusztig_pair
    rd = b.rd
    if word is None:
        words = enumerate_reduced_words(w)
        word = words[0] if words else ()
    xi = b.degree
    if not any(xi):
        return True
    g = b.element()
    return any(not lusztig_pair(g, m).is_zero() for m in demazure_monomials(rd, word, xi))


def degrees_up_to(rd: RootDatum, height: int) -> list[tuple[int, ...]]:
    """All xi in Q_+ with 0 <= height(xi) <= height, ordered by height."""
    out = [xi for xi in iproduct(range(height + 1), repeat=rd.rank) if sum(xi) <= height]
    return sorted(out, key=lambda x: (sum(x), x))


def basis_in_subalgebra(rd: RootDatum, w_word, xi, word=None) -> list[CrystalLabel]:
    """Labels b of degree xi with G^up(b) in U_q^-(w)."""
    from .pbw import in_nilpotent_subalgebra
    out = []
    for lab, g in dual_canonical_basis(rd, xi, word):
        if in_nilpotent_subalgebra(g, w_word):
            out.append(lab)
    return out
