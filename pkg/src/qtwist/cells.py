"""Quantum closed unipotent cells, their localizations, and twist maps.

A CellElement [D_{w lam, lam}]^{-1} [x] is stored as (w, lam, x) where x is
a representative in U_q^- projected onto the span of the G^up(b) with b in
B_w(infinity).  A SubgroupElement D_{w lam, lam}^{-1} y lives in the
localized quantum unipotent subgroup and keeps y unprojected.  Both use the
q-central rules

    [D_mu][x] = q^{(mu + w mu, wt x)} [x][D_mu]
    D_mu D_lam = q^{(mu, w lam - lam)} D_{lam + mu}

to multiply fractions.
"""

from __future__ import annotations

from functools import lru_cache

from . import linalg
from .canonical import (CrystalLabel, dcb_expand, demazure_membership,
                        dual_canonical_basis, reference_word)
from .highest_weight import (extremal_vector, matrix_coefficient, module,
                             vector_from_dcb)
from .rootdata import RootDatum, WeylElt
from .scalars import as_scalar, qpow
from .uqminus import NCElement, algebra


class CellError(ArithmeticError):
    pass


# minors and projection ----------------------------------------------------------

@lru_cache(maxsize=None)
def _minor(rd: RootDatum, w_image: tuple, word: tuple, lam: tuple) -> NCElement:
    w = WeylElt(rd, word)
    return matrix_coefficient(extremal_vector(w, lam), module(rd, lam).highest()).reduced()


def minor(w: WeylElt, lam) -> NCElement:
    """D_{w lam, lam} in U_q^-."""
    return _minor(w.rd, w.act(w.rd.rho), w.word, tuple(lam))


def minor_degree(w: WeylElt, lam) -> tuple[int, ...]:
    """lam - w lam in simple-root coordinates."""
    rd = w.rd
    return rd.weight_to_root_int(tuple(a - b for a, b in zip(lam, w.act(lam))))


def _is_longest(w: WeylElt) -> bool:
    return w.length == len(w.rd.longest_word)


@lru_cache(maxsize=None)
def _allowed(rd: RootDatum, word: tuple, c: tuple, w_word: tuple) -> bool:
    return demazure_membership(CrystalLabel(rd, word, c), WeylElt(rd, w_word))


def in_demazure(b: CrystalLabel, w: WeylElt) -> bool:
    if _is_longest(w):
        return True
    return _allowed(b.rd, b.word, b.c, w.word)


def project(x: NCElement, w: WeylElt) -> NCElement:
    """Representative of [x] in the span of G^up(b), b in B_w(infinity)."""
    if _is_longest(w):
        return x.reduced()
    out = algebra(x.rd).zero()
    for b, c in dcb_expand(x).items():
        if in_demazure(b, w):
            out = out + b.element().scale(c)
    return out.reduced()


class ClosedCellElement:
    """[x] in the quantum closed unipotent cell, as label -> coefficient."""

    __slots__ = ("w", "terms")

    def __init__(self, w: WeylElt, terms: dict):
        self.w = w
        self.terms = {b: c for b, c in terms.items() if not c.is_zero()}

    def element(self) -> NCElement:
        out = algebra(self.w.rd).zero()
        for b, c in self.terms.items():
            out = out + b.element().scale(c)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ClosedCellElement) and self.w == other.w and \
            (self.element() - other.element()).is_zero()

    __hash__ = None


def project_closed(x: NCElement, w: WeylElt) -> ClosedCellElement:
    terms = {b: c for b, c in dcb_expand(x).items() if in_demazure(b, w)}
    return ClosedCellElement(w, terms)


# localized algebras ----------------------------------------------------------

def _add_weights(a, b, sign=1):
    return tuple(x + sign * y for x, y in zip(a, b))


class _Localized:
    """Fractions D_lam^{-1} x with q-central denominators."""

    __slots__ = ("w", "lam", "num")
    projected = True

    def __init__(self, w: WeylElt, lam, num: NCElement):
        self.w = w
        self.lam = tuple(lam)
        self.num = num

    # hooks
    @classmethod
    def _clean(cls, w, x: NCElement) -> NCElement:
        return project(x, w) if cls.projected else x.reduced()

    @classmethod
    def make(cls, w, lam, num: NCElement):
        return cls(w, lam, cls._clean(w, num))

    @classmethod
    def one(cls, w: WeylElt):
        return cls(w, (0,) * w.rd.rank, algebra(w.rd).one())

    @classmethod
    def zero(cls, w: WeylElt):
        return cls(w, (0,) * w.rd.rank, algebra(w.rd).zero())

    @classmethod
    def from_element(cls, w: WeylElt, x: NCElement):
        return cls.make(w, (0,) * w.rd.rank, x)

    @classmethod
    def minor_inverse(cls, w: WeylElt, lam):
        """D_{w lam, lam}^{-1}."""
        return cls(w, lam, algebra(w.rd).one())

    @property
    def rd(self) -> RootDatum:
        return self.w.rd

    def _form(self, lam, mu) -> int:
        """(lam, w mu - mu) for dominant lam, mu."""
        rd = self.rd
        return rd.pair_weight_root(lam, tuple(-c for c in minor_degree(self.w, mu)))

    def lift(self, big) -> NCElement:
        """Numerator over D_big for big >= lam."""
        mu = _add_weights(big, self.lam, -1)
        if any(c < 0 for c in mu):
            raise CellError("lift target must dominate the denominator")
        if not any(mu):
            return self.num
        factor = qpow(-self._form(mu, self.lam))
        return self._clean(self.w, minor(self.w, mu) * self.num).scale(factor)

    def _common(self, other):
        big = tuple(max(a, b) for a, b in zip(self.lam, other.lam))
        return big, self.lift(big), other.lift(big)

    def __add__(self, other):
        self._check(other)
        big, a, b = self._common(other)
        return type(self)(self.w, big, (a + b).reduced())

    def __neg__(self):
        return type(self)(self.w, self.lam, -self.num)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return type(self)(self.w, self.lam, self.num.scale(as_scalar(s)))

    def _check(self, other):
        if type(other) is not type(self) or other.w != self.w:
            raise CellError("elements of different algebras")

    def __mul__(self, other):
        if not isinstance(other, _Localized):
            return self.scale(other)
        self._check(other)
        rd = self.rd
        lam, mu = self.lam, other.lam
        base = -self._form(mu, lam)
        mu_w = _add_weights(mu, self.w.act(mu))
        total = algebra(rd).zero()
        for xi, comp in self.num.components().items():
            e = base + rd.pair_weight_root(mu_w, tuple(-c for c in xi))
            total = total + (comp * other.num).scale(qpow(e))
        return type(self).make(self.w, _add_weights(lam, mu), total)

    def __pow__(self, n: int):
        out = type(self).one(self.w)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, _Localized):
            return NotImplemented
        self._check(other)
        _, a, b = self._common(other)
        return (a - b).is_zero()

    __hash__ = None

    def components(self) -> dict:
        """Homogeneous components keyed by weight (root coordinates)."""
        shift = minor_degree(self.w, self.lam)
        out = {}
        for xi, comp in self.num.components().items():
            wt = tuple(s - c for s, c in zip(shift, xi))
            out[wt] = type(self)(self.w, self.lam, comp)
        return out

    @property
    def weight(self) -> tuple[int, ...]:
        comps = self.components()
        if len(comps) != 1:
            raise CellError("element is not homogeneous")
        return next(iter(comps))

    def is_homogeneous(self) -> bool:
        return len(self.components()) <= 1

    def canonical(self):
        return canonicalize_cell(self)

    def labels(self) -> dict:
        return dcb_expand(self.num)

    def to_json(self) -> dict:
        x = self.canonical()
        return {
            "pattern": [i + 1 for i in self.w.word],
            "denominator": list(x.lam),
            "terms": [{"label": list(b.c), "coeff": str(c)}
                      for b, c in sorted(x.labels().items(), key=lambda t: t[0].c)],
        }

    def __repr__(self):
        return f"{type(self).__name__}(lam={list(self.lam)}, num={self.num})"


class CellElement(_Localized):
    """Element [D_{w lam, lam}]^{-1}[x] of the quantum unipotent cell."""

    projected = True


class SubgroupElement(_Localized):
    """Element D_{w lam, lam}^{-1} y of the localized quantum unipotent subgroup."""

    projected = False


LocalizedSubgroupElement = SubgroupElement


def cell_mul(x: CellElement, y: CellElement) -> CellElement:
    return (x * y).canonical()


def frozen(w: WeylElt, lam, kind=CellElement):
    """D_{w, lam} = q^{(lam1, w lam - lam)} D_{lam1}^{-1} D_{lam2}, lam = -lam1 + lam2."""
    lam = tuple(lam)
    lam1 = tuple(max(-c, 0) for c in lam)
    lam2 = tuple(max(c, 0) for c in lam)
    return frozen_split(w, lam1, lam2, kind)


def frozen_split(w: WeylElt, lam1, lam2, kind=CellElement):
    rd = w.rd
    lam = _add_weights(lam2, lam1, -1)
    e = rd.pair_weight_root(lam1, tuple(-c for c in minor_degree_any(w, lam)))
    return kind.make(w, tuple(lam1), minor(w, lam2).scale(qpow(e)))


def minor_degree_any(w: WeylElt, lam) -> tuple[int, ...]:
    """lam - w lam in root coordinates for any integral weight lam."""
    return w.rd.weight_to_root_int(tuple(a - b for a, b in zip(lam, w.act(lam))))


def fundamental_minor_is_trivial(w: WeylElt, i: int) -> bool:
    return w.act(w.rd.fundamental(i)) == w.rd.fundamental(i)


def _divide(x: _Localized, i: int):
    """x with lam reduced by varpi_i when the numerator is divisible, else None."""
    rd, w = x.rd, x.w
    pi = rd.fundamental(i)
    lam2 = _add_weights(x.lam, pi, -1)
    factor = qpow(rd.pair_weight_root(pi, tuple(-c for c in minor_degree(w, lam2))))
    if fundamental_minor_is_trivial(w, i):
        return type(x)(w, lam2, x.num.scale(factor))
    d = minor(w, pi)
    ddeg = minor_degree(w, pi)
    alg = algebra(rd)
    quotient = alg.zero()
    for xi, comp in x.num.components().items():
        eta = tuple(a - b for a, b in zip(xi, ddeg))
        if any(c < 0 for c in eta):
            return None
        if x.projected:
            cands = [g for b, g in dual_canonical_basis(rd, eta) if in_demazure(b, w)]
        else:
            sp = alg.space(eta)
            cands = [alg.monomial(b) for b in sp.basis]
        if not cands:
            return None
        sp_xi = alg.space(xi)
        cols = [sp_xi.coords(type(x)._clean(w, d * g).terms) for g in cands]
        rhs = sp_xi.coords(comp.terms)
        mat = [[cols[k][r] for k in range(len(cands))] for r in range(sp_xi.dim)]
        try:
            sol = linalg.solve(mat, rhs)
        except linalg.InconsistentError:
            return None
        for g, c in zip(cands, sol):
            if not c.is_zero():
                quotient = quotient + g.scale(c)
    return type(x)(w, lam2, quotient.reduced().scale(factor))


def canonicalize_cell(x: _Localized):
    """Reduce the denominator while the numerator is divisible by D_{w varpi_i}."""
    if x.num.is_zero():
        return type(x).zero(x.w)
    cur = x
    changed = True
    while changed:
        changed = False
        for i in range(x.rd.rank):
            if cur.lam[i] == 0:
                continue
            nxt = _divide(cur, i)
            if nxt is not None:
                cur = nxt
                changed = True
    return cur


# dual canonical basis of the cell ------------------------------------------------

def basis_exponent(x_lam, b_weight, w: WeylElt) -> int:
    """(lam, wt b + lam - w lam) with wt b in root coordinates."""
    rd = w.rd
    shift = minor_degree(w, x_lam)
    return rd.pair_weight_root(x_lam, _add_weights(b_weight, shift))


def cell_basis_element(w: WeylElt, lam, b: CrystalLabel) -> CellElement:
    """q^{(lam, wt b + lam - w lam)} [D_lam]^{-1} [G^up(b)]."""
    e = basis_exponent(lam, b.weight, w)
    return CellElement.make(w, lam, b.element().scale(qpow(e)))


def cell_basis_decomposition(x: CellElement) -> dict:
    """Coefficients of x in the cell basis at x's own denominator."""
    out = {}
    for b, c in x.labels().items():
        e = basis_exponent(x.lam, b.weight, x.w)
        out[b] = c * qpow(-e)
    return out


def is_cell_basis_element(x: CellElement) -> bool:
    x = canonicalize_cell(x)
    dec = cell_basis_decomposition(x)
    return len(dec) == 1 and next(iter(dec.values())).is_one()


def cell_sigma(x: _Localized) -> _Localized:
    """Dual bar involution: antilinear, fixing every cell basis element."""
    out = algebra(x.rd).zero()
    for b, c in x.labels().items():
        e = basis_exponent(x.lam, b.weight, x.w)
        out = out + b.element().scale(c.bar() * qpow(2 * e))
    return type(x)(x.w, x.lam, out.reduced())


# twist maps ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _twist_data(b: CrystalLabel, w_image: tuple, w_word: tuple):
    """(lam_b, scalar, D_{u_{w lam}, u}) for G^up(b) = D_{u, u_lam}."""
    rd = b.rd
    w = WeylElt(rd, w_word)
    lam, u = vector_from_dcb(b)
    e = -rd.pair_weight_root(lam, b.weight)
    d = matrix_coefficient(extremal_vector(w, lam), u)
    return lam, qpow(e), d


def _twist_generic(x: _Localized, target):
    rd, w = x.rd, x.w
    head = x.lam
    e0 = x._form(head, head)
    # [D_lam]^{-1} -> q^{(lam, w lam - lam)} D_lam
    pre = target.make(w, (0,) * rd.rank, minor(w, head).scale(qpow(e0)))
    total = target.zero(w)
    for b, c in x.labels().items():
        lam, s, d = _twist_data(b, w.act(rd.rho), w.word)
        total = total + target.make(w, lam, d.scale(s * c))
    return pre * total


def twist_iso(x: CellElement) -> SubgroupElement:
    """gamma_{w,q}: quantum unipotent cell -> localized unipotent subgroup."""
    return canonicalize_cell(_twist_generic(x, SubgroupElement))


def dcp_embed(y: SubgroupElement) -> CellElement:
    """iota_w: project the numerator, keep the denominator."""
    return canonicalize_cell(CellElement.make(y.w, y.lam, y.num))


def twist_auto(x: CellElement) -> CellElement:
    """eta_{w,q} = iota_w o gamma_{w,q}."""
    return dcp_embed(_twist_generic(x, SubgroupElement))


def twist_auto_direct(x: CellElement) -> CellElement:
    """eta_{w,q} evaluated termwise inside the cell."""
    return canonicalize_cell(_twist_generic(x, CellElement))


def twist_power(x: CellElement, n: int) -> CellElement:
    for _ in range(n):
        x = twist_auto(x)
    return x


def periodicity_target(x: CellElement) -> CellElement:
    """q^{(wt x + w0 wt x, wt x)} D_{w0, -wt x - w0 wt x} x."""
    rd, w = x.rd, x.w
    wt = x.weight
    w0wt = w.act_root(wt)
    s = _add_weights(wt, w0wt)
    e = rd.root_form(s, wt)
    lam = rd.root_to_weight(tuple(-c for c in s))
    return (frozen(w, lam) * x).scale(qpow(e)).canonical()


def periodicity_check(x: CellElement, n: int = 6) -> dict:
    if not _is_longest(x.w):
        raise CellError("periodicity is stated for the longest element")
    if not x.is_homogeneous():
        raise CellError("periodicity_check needs a homogeneous element")
    got = twist_power(x, n)
    if n == 6:
        expected = periodicity_target(x)
    else:
        expected = x
    return {"n": n, "identity": got == x, "matches": got == expected,
            "result": got, "expected": expected}


def pattern(rd: RootDatum, word=None) -> WeylElt:
    word = tuple(word) if word is not None else reference_word(rd)
    return rd.element_from_word(word)


def specialize_coefficients(x: CellElement) -> list:
    """Values at q = 1 of the cell-basis coefficients of x."""
    return [c.specialize() for c in cell_basis_decomposition(x).values()]

