"""Braid symmetries on a normally ordered model of U_q, and PBW bases.

A TriangularElement is a combination of normal monomials F * K_beta * E
where F is a word in the f_i, E a word in the e_i and K_beta the torus
element acting on weight mu by q^{(beta, mu)} (so t_i = K_{alpha_i}).
Products are straightened eagerly with

    K_beta f_j = q^{-(beta, alpha_j)} f_j K_beta,
    K_beta e_j = q^{(beta, alpha_j)} e_j K_beta,
    e_i f_j = f_j e_i + delta_ij (t_i - t_i^{-1}) / (q_i - q_i^{-1}).

Serre relations are not applied; equality is tested through the pairing on
each tensor factor.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from .config import check_height
from .rootdata import RootDatum, is_reduced
from .scalars import ONE, ZERO, Scalar, as_scalar, qfactorial, qpow
from .uqminus import NCElement, algebra, lusztig_pair, word_degree


class TriangularElement:
    __slots__ = ("rd", "terms")

    def __init__(self, rd: RootDatum, terms=None):
        self.rd = rd
        out = {}
        for k, c in (terms or {}).items():
            c = as_scalar(c)
            if not c.is_zero():
                out[k] = c
        self.terms = out

    @staticmethod
    def from_minus(x: NCElement) -> "TriangularElement":
        zero = (0,) * x.rd.rank
        return TriangularElement(x.rd, {(w, zero, ()): c for w, c in x.terms.items()})

    @staticmethod
    def f(rd, i):
        return TriangularElement(rd, {((i,), (0,) * rd.rank, ()): ONE})

    @staticmethod
    def e(rd, i):
        return TriangularElement(rd, {((), (0,) * rd.rank, (i,)): ONE})

    @staticmethod
    def torus(rd, beta):
        return TriangularElement(rd, {((), tuple(beta), ()): ONE})

    @staticmethod
    def one(rd):
        return TriangularElement.torus(rd, (0,) * rd.rank)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            out[k] = c if prev is None else prev + c
        return TriangularElement(self.rd, out)

    def __neg__(self):
        return TriangularElement(self.rd, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = as_scalar(s)
        return TriangularElement(self.rd, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TriangularElement):
            return tri_mul(self, other)
        return self.scale(other)

    def project_minus(self) -> NCElement:
        """The U^- (x) 1 (x) 1 component."""
        zero = (0,) * self.rd.rank
        return NCElement(self.rd, {F: c for (F, beta, E), c in self.terms.items()
                                   if not E and tuple(beta) == zero})

    def is_zero(self) -> bool:
        return triangular_is_zero(self)

    def __eq__(self, other):
        if not isinstance(other, TriangularElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None


def _beta_form(rd, beta, word) -> int:
    """(beta, sum of alpha over the letters of word)."""
    deg = word_degree(rd, word)
    return rd.root_form(beta, deg)


@lru_cache(maxsize=None)
def _e_times_f(rd: RootDatum, E: tuple, F: tuple) -> tuple:
    """Normal form of e_E * f_F as a tuple of ((F', beta, E'), coeff)."""
    zero = (0,) * rd.rank
    if not E:
        return (((F, zero, ()), ONE),)
    if not F:
        return (((), zero, E), ONE),
    head, i = E[:-1], E[-1]
    out: dict = {}

    def add(key, c):
        prev = out.get(key)
        out[key] = c if prev is None else prev + c

    # e_i F = F e_i + sum_k F_hat (q^{-(a_i,rest)} t_i - q^{(a_i,rest)} t_i^-1)/(q_i - q_i^-1)
    for (F2, beta, E2), c in _e_times_f(rd, head, F):
        add((F2, beta, E2 + (i,)), c)
    di = rd.d(i)
    denom = (qpow(di) - qpow(-di)).inverse()
    alpha = rd.unit(i)
    for k, j in enumerate(F):
        if j != i:
            continue
        rest = F[k + 1:]
        m = _beta_form(rd, alpha, rest)
        Fhat = F[:k] + rest
        for sgn, bvec, expo in ((1, alpha, -m), (-1, tuple(-a for a in alpha), m)):
            coeff = denom * qpow(expo) * sgn
            for (F2, beta, E2), c in _e_times_f(rd, head, Fhat):
                # E2 * K_b = q^{-(b, deg E2)} K_b E2
                shift = -_beta_form(rd, bvec, E2)
                nb = tuple(a + b for a, b in zip(beta, bvec))
                add((F2, nb, E2), c * coeff * qpow(shift))
    return tuple((k, c) for k, c in out.items() if not c.is_zero())


def tri_mul(x: TriangularElement, y: TriangularElement) -> TriangularElement:
    rd = x.rd
    out: dict = {}
    for (F1, b1, E1), c1 in x.terms.items():
        for (F2, b2, E2), c2 in y.terms.items():
            c12 = c1 * c2
            for (F3, b3, E3), c3 in _e_times_f(rd, E1, F2):
                # K_b1 F3 = q^{-(b1, deg F3)} F3 K_b1 ; E3 K_b2 = q^{-(b2, deg E3)} K_b2 E3
                expo = -_beta_form(rd, b1, F3) - _beta_form(rd, b2, E3)
                key = (F1 + F3, tuple(a + b + c for a, b, c in zip(b1, b3, b2)), E3 + E2)
                val = c12 * c3 * qpow(expo)
                prev = out.get(key)
                out[key] = val if prev is None else prev + val
    return TriangularElement(rd, out)


def _tri_power(x: TriangularElement, n: int) -> TriangularElement:
    out = TriangularElement.one(x.rd)
    for _ in range(n):
        out = tri_mul(out, x)
    return out


def _divided(rd, gen, i, n):
    return _tri_power(gen(rd, i), n).scale(qfactorial(n, rd.d(i)).inverse())


@lru_cache(maxsize=None)
def _braid_generator(rd: RootDatum, i: int, kind: str, j: int, inverse: bool):
    """T_i^{+-1} applied to e_j or f_j."""
    alpha = rd.unit(i)
    neg = tuple(-a for a in alpha)
    E, F = TriangularElement.e, TriangularElement.f
    if j == i:
        if kind == "e":
            # T_i(e_i) = -f_i t_i ; T_i^-1(e_i) = -t_i^-1 f_i
            if not inverse:
                return TriangularElement(rd, {((i,), alpha, ()): -ONE})
            return TriangularElement.torus(rd, neg) * F(rd, i) * (-1)
        # T_i(f_i) = -t_i^-1 e_i ; T_i^-1(f_i) = -e_i t_i
        if not inverse:
            return TriangularElement(rd, {((), neg, (i,)): -ONE})
        return E(rd, i) * TriangularElement.torus(rd, alpha) * (-1)
    n = -rd.a(i, j)
    di = rd.d(i)
    gen = E if kind == "e" else F
    out = TriangularElement(rd, {})
    for r in range(n + 1):
        s = n - r
        sign = -1 if r % 2 else 1
        if kind == "e":
            coeff = qpow(-di * r) * sign
            left, right = (s, r) if not inverse else (r, s)
        else:
            coeff = qpow(di * r) * sign
            left, right = (r, s) if not inverse else (s, r)
        term = _divided(rd, gen, i, left) * gen(rd, j) * _divided(rd, gen, i, right)
        out = out + term.scale(coeff)
    return out


def braid_apply(i: int, x: TriangularElement, direction: str = "T") -> TriangularElement:
    """Apply T_i (direction 'T') or T_i^{-1} ('T_inverse') as an automorphism."""
    if direction not in ("T", "T_inverse"):
        raise ValueError("direction must be 'T' or 'T_inverse'")
    rd = x.rd
    inv = direction == "T_inverse"
    out = TriangularElement(rd, {})
    for (F, beta, E), c in x.terms.items():
        acc = TriangularElement.one(rd).scale(c)
        for j in F:
            acc = acc * _braid_generator(rd, i, "f", j, inv)
        acc = acc * TriangularElement.torus(rd, _reflect_beta(rd, i, beta))
        for j in E:
            acc = acc * _braid_generator(rd, i, "e", j, inv)
        out = out + acc
    return out


def _reflect_beta(rd, i, beta):
    c = sum(rd.cartan[i][j] * beta[j] for j in range(rd.rank))
    return tuple(beta[j] - (c if j == i else 0) for j in range(rd.rank))


def triangular_is_zero(x: TriangularElement) -> bool:
    """Zero test in U^- (x) U^0 (x) U^+ using the pairing on both halves."""
    rd = x.rd
    alg = algebra(rd)
    groups: dict = {}
    for (F, beta, E), c in x.terms.items():
        key = (tuple(beta), word_degree(rd, F), word_degree(rd, E))
        groups.setdefault(key, []).append((F, E, c))
    for (beta, dF, dE), items in groups.items():
        spF, spE = alg.space(dF), alg.space(dE)
        acc: dict = {}
        for F, E, c in items:
            cf = spF.word_coords(F)
            ce = spE.word_coords(E)
            for a, xa in enumerate(cf):
                if xa.is_zero():
                    continue
                for b, xb in enumerate(ce):
                    if xb.is_zero():
                        continue
                    prev = acc.get((a, b), ZERO)
                    acc[(a, b)] = prev + c * xa * xb
        if any(not v.is_zero() for v in acc.values()):
            return False
    return True


# braid relations ----------------------------------------------------------

def braid_relation_length(rd: RootDatum, i: int, j: int) -> int:
    prod = rd.a(i, j) * rd.a(j, i)
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod]


def generators(rd: RootDatum) -> dict[str, TriangularElement]:
    gens = {}
    for k in range(rd.rank):
        gens[f"e{k + 1}"] = TriangularElement.e(rd, k)
        gens[f"f{k + 1}"] = TriangularElement.f(rd, k)
        gens[f"t{k + 1}"] = TriangularElement.torus(rd, rd.unit(k))
    return gens


def check_braid_relations(rd: RootDatum, direction: str = "T") -> dict[str, bool]:
    """For every pair i != j and every generator g, compare both braid words."""
    out = {}
    gens = generators(rd)
    for i in range(rd.rank):
        for j in range(i + 1, rd.rank):
            m = braid_relation_length(rd, i, j)
            w1 = [i if k % 2 == 0 else j for k in range(m)]
            w2 = [j if k % 2 == 0 else i for k in range(m)]
            for name, g in gens.items():
                a, b = g, g
                for k in reversed(w1):
                    a = braid_apply(k, a, direction)
                for k in reversed(w2):
                    b = braid_apply(k, b, direction)
                out[f"{direction}:{i + 1}{j + 1}:{name}"] = (a - b).is_zero()
    return out


def check_braid_inverse(rd: RootDatum) -> bool:
    for g in generators(rd).values():
        for i in range(rd.rank):
            if not (braid_apply(i, braid_apply(i, g, "T_inverse"), "T") - g).is_zero():
                return False
            if not (braid_apply(i, braid_apply(i, g, "T"), "T_inverse") - g).is_zero():
                return False
    return True


# PBW bases -------------------------------------------------------------------

class PBWError(ArithmeticError):
    pass


def root_sequence(rd: RootDatum, word) -> list[tuple[int, ...]]:
    """beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k} in root coordinates."""
    return [rd.act_word_root(word[:k], rd.unit(word[k])) for k in range(len(word))]


@lru_cache(maxsize=None)
def root_vector(rd: RootDatum, word: tuple, k: int) -> NCElement:
    """T_{i_1} ... T_{i_{k-1}} (f_{i_k}) as an element of U^-."""
    x = algebra(rd).gen(word[k])
    for j in reversed(range(k)):
        t = braid_apply(word[j], TriangularElement.from_minus(x), "T")
        x = t.project_minus().reduced()
    return x


def _check_word(rd, word):
    if not is_reduced(rd, word):
        raise PBWError(f"word {tuple(i + 1 for i in word)} is not reduced")


@lru_cache(maxsize=None)
def _pbw_vector(rd: RootDatum, c: tuple, word: tuple) -> NCElement:
    alg = algebra(rd)
    out = alg.one()
    for k, ck in enumerate(c):
        if ck == 0:
            continue
        rv = root_vector(rd, word, k)
        pw = alg.one()
        for _ in range(ck):
            pw = (pw * rv).reduced()
        pw = pw.scale(qfactorial(ck, rd.d(word[k])).inverse())
        out = (out * pw).reduced()
    return out


def pbw_degree(rd, c, word) -> tuple[int, ...]:
    betas = root_sequence(rd, word)
    return tuple(sum(ck * b[i] for ck, b in zip(c, betas)) for i in range(rd.rank))


def pbw_vector(c, word, rd: RootDatum, validate: bool = True) -> NCElement:
    """F^low(c, i)."""
    c, word = tuple(c), tuple(word)
    _check_word(rd, word)
    if len(c) != len(word):
        raise ValueError("exponent vector and word have different lengths")
    check_height(sum(pbw_degree(rd, c, word)))
    x = _pbw_vector(rd, c, word)
    if validate and not _norm_ok(rd, c, word):
        raise PBWError(f"norm identity fails for c={c}; straightening bug")
    return x


@lru_cache(maxsize=None)
def _norm_ok(rd, c, word) -> bool:
    x = _pbw_vector(rd, c, word)
    return lusztig_pair(x, x) == pbw_norm_closed(c, word, rd)


def pbw_norm_closed(c, word, rd: RootDatum) -> Scalar:
    out = ONE
    for ck, i in zip(c, word):
        for j in range(1, ck + 1):
            out = out * (ONE - qpow(2 * j * rd.d(i))).inverse()
    return out


def pbw_dual(c, word, rd: RootDatum) -> NCElement:
    """F^up(c, i) = F^low / (F^low, F^low)_L."""
    return pbw_vector(c, word, rd).scale(pbw_norm_closed(c, word, rd).inverse())


def pbw_exponents(rd: RootDatum, word, xi) -> list[tuple[int, ...]]:
    """All c with sum_k c_k beta_k = xi, in increasing left-lex order."""
    betas = root_sequence(rd, tuple(word))
    xi = tuple(xi)
    out = []

    def rec(k, rest, acc):
        if k == len(betas):
            if all(r == 0 for r in rest):
                out.append(tuple(acc))
            return
        b = betas[k]
        m = 0
        while all(r - m * bb >= 0 for r, bb in zip(rest, b)):
            acc.append(m)
            rec(k + 1, tuple(r - m * bb for r, bb in zip(rest, b)), acc)
            acc.pop()
            m += 1
            if not any(b):
                break

    rec(0, xi, [])
    return sorted(out)


def exponents_up_to(rd: RootDatum, word, total: int) -> list[tuple[int, ...]]:
    """All c with |c| <= total."""
    n = len(word)
    return [c for c in iproduct(range(total + 1), repeat=n) if sum(c) <= total]


def pbw_expand(x: NCElement, word, rd: RootDatum | None = None):
    """Orthogonal expansion of x in F^low(., word); returns (coeffs, residual)."""
    rd = rd or x.rd
    word = tuple(word)
    _check_word(rd, word)
    coeffs: dict[tuple[int, ...], Scalar] = {}
    approx = algebra(rd).zero()
    for xi, comp in x.components().items():
        for c in pbw_exponents(rd, word, xi):
            F = pbw_vector(c, word, rd)
            val = lusztig_pair(comp, F) / pbw_norm_closed(c, word, rd)
            if not val.is_zero():
                coeffs[c] = val
                approx = approx + F.scale(val)
    residual = (x - approx).reduced()
    return coeffs, residual


def in_nilpotent_subalgebra(x: NCElement, word) -> bool:
    """Membership in U_q^-(w) for the element w with reduced word `word`."""
    _, res = pbw_expand(x, word)
    return res.is_zero()
