"""Integrable highest weight modules V(lambda) and unipotent matrix coefficients.

A vector of V(lambda) is stored as a combination of words y, meaning
f_y . u_lambda.  Degrees xi in Q_+ label the weight space of weight
lambda - xi.  The contravariant form obeys (f_i x.u, y.u) = (x.u, e_i y.u),
and e_i removes a letter i from a word with the quantum integer
[<h_i, lambda - (letters to its right)>]_i, so the same word-form engine as
for U_q^- applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .rootdata import RootDatum, WeylElt
from .scalars import ONE, ZERO, Scalar, qfactorial, qint
from .uqminus import NCElement, WordForm, algebra

_GEN = 1234567891


class ModuleError(ArithmeticError):
    pass


# weight multiplicities -------------------------------------------------------

@lru_cache(maxsize=None)
def _multiplicities(rd: RootDatum, lam: tuple) -> dict:
    """Freudenthal recursion; keys are degrees xi (V(lam)_{lam - xi})."""
    rho = rd.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = rd.weight_form(lr, lr)
    roots = rd.positive_roots
    mult = {(0,) * rd.rank: 1}
    # the lowest weight is w0 lam, so degrees are bounded by lam - w0 lam
    bound = rd.weight_to_root_int(tuple(a - b for a, b in
                                        zip(lam, rd.longest_element().act(lam))))
    from itertools import product as iproduct
    degs = sorted((xi for xi in iproduct(*(range(b + 1) for b in bound))),
                  key=lambda x: (sum(x), x))
    for xi in degs[1:]:
        mu = tuple(l - c for l, c in zip(lam, rd.root_to_weight(xi)))
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = top - rd.weight_form(mr, mr)
        if den == 0:
            continue
        acc = Fraction(0)
        for beta in roots:
            k = 1
            while True:
                up = tuple(x - k * b for x, b in zip(xi, beta))
                if any(c < 0 for c in up):
                    break
                m = mult.get(up, 0)
                if m:
                    nu = tuple(l - c for l, c in zip(lam, rd.root_to_weight(up)))
                    acc += m * rd.pair_weight_root(nu, beta)
                k += 1
        val = 2 * acc / den
        if val.denominator != 1:
            raise ModuleError("Freudenthal recursion produced a fraction")
        if val:
            mult[xi] = int(val)
    return mult


def weight_multiplicity(rd: RootDatum, lam, xi) -> int:
    return _multiplicities(rd, tuple(lam)).get(tuple(xi), 0)


# the form ---------------------------------------------------------------------

class ModuleForm(WordForm):
    def __init__(self, rd: RootDatum, lam: tuple):
        super().__init__(rd)
        self.lam = lam

    def coeff_key(self, i, word, k):
        n = self.lam[i] - sum(self.rd.a(i, j) for j in word[k + 1:])
        return (self.rd.d(i), n)

    @staticmethod
    @lru_cache(maxsize=None)
    def coeff_exact(key):
        d, n = key
        return qint(n, d)

    @staticmethod
    @lru_cache(maxsize=None)
    def coeff_mod(key):
        d, n = key
        p = linalg.PRIME
        a = pow(_GEN, 2 * d, p)
        inv = pow(a, p - 2, p)
        num = (pow(a, n, p) - pow(inv, n, p)) % p if n >= 0 else \
            (pow(inv, -n, p) - pow(a, -n, p)) % p
        return num * pow((a - inv) % p, p - 2, p) % p

    def target_dim(self, xi):
        return weight_multiplicity(self.rd, self.lam, xi)


@dataclass(frozen=True)
class HWModule:
    rd: RootDatum
    lam: tuple

    @property
    def form(self) -> ModuleForm:
        return _module_form(self.rd, self.lam)

    def space(self, xi):
        return self.form.space(tuple(xi))

    def highest(self) -> "ModuleVector":
        return ModuleVector(self, (0,) * self.rd.rank, {(): ONE})

    def weight_of(self, xi) -> tuple[int, ...]:
        return tuple(l - c for l, c in zip(self.lam, self.rd.root_to_weight(xi)))

    def degree_of(self, mu) -> tuple[int, ...] | None:
        diff = tuple(l - m for l, m in zip(self.lam, mu))
        try:
            xi = self.rd.weight_to_root_int(diff)
        except ValueError:
            return None
        if any(c < 0 for c in xi):
            return None
        return xi

    def vector(self, xi, coords) -> "ModuleVector":
        sp = self.space(xi)
        return ModuleVector(self, tuple(xi), sp.from_coords(coords))


@lru_cache(maxsize=None)
def _module_form(rd, lam) -> ModuleForm:
    return ModuleForm(rd, lam)


def module(rd: RootDatum, lam) -> HWModule:
    lam = tuple(lam)
    if any(c < 0 for c in lam):
        raise ModuleError(f"{lam} is not dominant")
    return HWModule(rd, lam)


class ModuleVector:
    """Homogeneous vector sum_y c_y f_y . u_lambda."""

    __slots__ = ("module", "degree", "terms")

    def __init__(self, mod: HWModule, degree, terms):
        self.module = mod
        self.degree = tuple(degree)
        self.terms = {tuple(w): c for w, c in terms.items() if not c.is_zero()}

    @property
    def weight(self) -> tuple[int, ...]:
        return self.module.weight_of(self.degree)

    def coords(self) -> list[Scalar]:
        sp = self.module.space(self.degree)
        return sp.coords(self.terms)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords())

    def __add__(self, other):
        if other.degree != self.degree:
            raise ModuleError("adding vectors of different weights")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return ModuleVector(self.module, self.degree, out)

    def scale(self, s):
        return ModuleVector(self.module, self.degree,
                            {w: c * s for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        if self.degree != other.degree:
            return self.is_zero() and other.is_zero()
        return (self - other).is_zero()

    __hash__ = None

    def reduced(self) -> "ModuleVector":
        return self.module.vector(self.degree, self.coords())

    def __repr__(self):
        parts = [f"({c})*" + ("*".join(f"f{i + 1}" for i in w) or "1")
                 for w, c in sorted(self.terms.items())]
        return (" + ".join(parts) or "0") + f" . u{list(self.module.lam)}"


def weight_basis_module(lam, mu, rd: RootDatum) -> dict:
    """Monomial basis of V(lam)_mu."""
    mod = module(rd, lam)
    xi = mod.degree_of(mu)
    if xi is None or weight_multiplicity(rd, lam, xi) == 0:
        return {"dim": 0, "degree": xi, "basis": []}
    sp = mod.space(xi)
    return {"dim": sp.dim, "degree": xi, "basis": list(sp.basis)}


def act_f(i: int, v: ModuleVector, power: int = 1) -> ModuleVector:
    """f_i^{(power)} . v."""
    deg = list(v.degree)
    deg[i] += power
    scale = qfactorial(power, v.module.rd.d(i)).inverse()
    terms = {(i,) * power + w: c * scale for w, c in v.terms.items()}
    out = ModuleVector(v.module, tuple(deg), terms)
    if weight_multiplicity(v.module.rd, v.module.lam, out.degree) == 0:
        return ModuleVector(v.module, tuple(deg), {})
    return out


def act_e(i: int, v: ModuleVector) -> ModuleVector:
    deg = list(v.degree)
    if deg[i] == 0:
        return ModuleVector(v.module, tuple(deg), {})
    deg[i] -= 1
    return ModuleVector(v.module, tuple(deg), v.module.form.derive(i, v.terms))


def module_action(g, v: ModuleVector) -> ModuleVector:
    """g is ('f', i), ('e', i), or ('K', beta) with beta in root coordinates."""
    kind, arg = g
    if kind == "f":
        return act_f(arg, v)
    if kind == "e":
        return act_e(arg, v)
    if kind == "K":
        from .scalars import qpow
        return v.scale(qpow(v.module.rd.pair_weight_root(v.weight, arg)))
    raise ValueError(f"unknown generator {g!r}")


def act_word(word, v: ModuleVector) -> ModuleVector:
    """f_word . v."""
    deg = list(v.degree)
    for i in word:
        deg[i] += 1
    return ModuleVector(v.module, tuple(deg),
                        {tuple(word) + w: c for w, c in v.terms.items()})


def act_element(y: NCElement, v: ModuleVector) -> ModuleVector:
    """y . v for homogeneous y in U_q^-."""
    out = None
    for w, c in y.terms.items():
        t = act_word(w, v).scale(c)
        out = t if out is None else out + t
    if out is None:
        return ModuleVector(v.module, v.degree, {})
    return out


def contravariant_form(v1: ModuleVector, v2: ModuleVector) -> Scalar:
    if v1.module != v2.module:
        raise ModuleError("vectors from different modules")
    if v1.degree != v2.degree:
        return ZERO
    if weight_multiplicity(v1.module.rd, v1.module.lam, v1.degree) == 0:
        return ZERO
    sp = v1.module.space(v1.degree)
    return sp.form_coords(sp.coords(v1.terms), sp.coords(v2.terms))


def extremal_exponents(w: WeylElt, lam) -> tuple[int, ...]:
    """a_k = <h_{i_k}, s_{i_{k+1}} ... s_{i_l} lam> along the stored word of w."""
    rd = w.rd
    word = w.word
    out = []
    for k in range(len(word)):
        mu = rd.act_word_weight(word[k + 1:], lam)
        out.append(mu[word[k]])
    return tuple(out)


def extremal_vector(w: WeylElt, lam) -> ModuleVector:
    """u_{w lam} = f_{i_1}^{(a_1)} ... f_{i_l}^{(a_l)} u_lam."""
    lam = tuple(lam)
    mod = module(w.rd, lam)
    v = mod.highest()
    exps = extremal_exponents(w, lam)
    for i, a in reversed(list(zip(w.word, exps))):
        if a:
            v = act_f(i, v, a)
    return v


def matrix_coefficient(u: ModuleVector, u2: ModuleVector) -> NCElement:
    """D_{u,u'}: (D, x)_L = (u, x.u')_lambda for every x in U_q^-."""
    rd = u.module.rd
    delta = tuple(a - b for a, b in zip(u.degree, u2.degree))
    if any(c < 0 for c in delta):
        return algebra(rd).zero()
    alg = algebra(rd)
    sp = alg.space(delta)
    if sp.dim == 0:
        return alg.zero()
    pairs = [contravariant_form(u, act_word(b, u2)) for b in sp.basis]
    norm = alg.norm_factor(delta).inverse()
    coords = [c * norm for c in sp.gram_solver.apply(pairs)]
    return NCElement(rd, sp.from_coords(coords))


def quantum_minor(w: WeylElt, w2: WeylElt, lam) -> NCElement:
    """D_{w lam, w' lam}."""
    return matrix_coefficient(extremal_vector(w, lam), extremal_vector(w2, lam))


def module_basis_vectors(mod: HWModule, xi) -> list[ModuleVector]:
    if weight_multiplicity(mod.rd, mod.lam, xi) == 0:
        return []
    sp = mod.space(xi)
    return [ModuleVector(mod, tuple(xi), {b: ONE}) for b in sp.basis]


def vector_from_dcb(b) -> tuple[tuple[int, ...], ModuleVector]:
    """(lambda, u) with D_{u, u_lambda} = G^up(b), lambda = sum eps*_i varpi_i."""
    from .canonical import epsilon_vector
    rd = b.rd
    lam = epsilon_vector(b, "right")
    mod = module(rd, lam)
    xi = b.degree
    target = b.element()
    return lam, solve_minor_vector(mod, xi, target, mod.highest())


def solve_minor_vector(mod: HWModule, xi, target: NCElement, right: ModuleVector) -> ModuleVector:
    """u in V(lambda)_{lambda-xi} with D_{u, right} = target."""
    rd = mod.rd
    vecs = module_basis_vectors(mod, xi)
    alg = algebra(rd)
    delta = tuple(a - b for a, b in zip(xi, right.degree))
    sp = alg.space(delta)
    cols = [sp.coords(matrix_coefficient(v, right).terms) for v in vecs]
    rhs = sp.coords(target.terms)
    mat = [[cols[k][r] for k in range(len(vecs))] for r in range(sp.dim)]
    try:
        sol = linalg.solve(mat, rhs) if vecs else []
    except linalg.InconsistentError:
        raise ModuleError("no module vector realizes this element") from None
    if not vecs and any(not c.is_zero() for c in rhs):
        raise ModuleError("no module vector realizes this element")
    out = ModuleVector(mod, tuple(xi), {})
    for v, c in zip(vecs, sol):
        if not c.is_zero():
            out = out + v.scale(c)
    return out


def demazure_dimension(w: WeylElt, lam, xi) -> int:
    """dim of (U_q^+ . u_{w lam}) in degree xi."""
    u = extremal_vector(w, lam)
    mod = u.module
    if weight_multiplicity(mod.rd, mod.lam, xi) == 0:
        return 0
    # all e-words of the right degree applied to u
    diff = tuple(a - b for a, b in zip(u.degree, xi))
    if any(c < 0 for c in diff):
        return 0
    from .uqminus import words_of_degree
    rows = []
    for word in words_of_degree(diff):
        v = u
        for i in reversed(word):
            v = act_e(i, v)
        rows.append(v.coords())
    return linalg.rank(rows) if rows else 0


# upper global basis vectors and the crystalized Kumar-Peterson identity -------------

def upper_global_vectors(mod: HWModule, xi) -> list[ModuleVector]:
    """G^up_lambda(b) for b of degree xi, via D_{G^up_lambda(b), u_lambda} = G^up(b~)."""
    from .canonical import dual_canonical_basis, epsilon_vector
    rd, lam = mod.rd, mod.lam
    if weight_multiplicity(rd, lam, xi) == 0:
        return []
    out = []
    for b, g in dual_canonical_basis(rd, xi):
        if all(e <= l for e, l in zip(epsilon_vector(b, "right"), lam)):
            out.append(solve_minor_vector(mod, xi, g, mod.highest()))
    if len(out) != weight_multiplicity(rd, lam, xi):
        raise ModuleError(f"found {len(out)} upper global vectors in degree {xi}")
    return out


def kumar_peterson_labels(w: WeylElt, lam, max_height: int) -> set:
    """Labels of * D_{u_{w lam}, G^up_lam(b)} of height <= max_height."""
    from .canonical import dcb_expand, degrees_up_to
    from .uqminus import star
    rd = w.rd
    lam = tuple(lam)
    mod = module(rd, lam)
    top = extremal_vector(w, lam)
    shift = top.degree
    labels = set()
    for delta in degrees_up_to(rd, max_height):
        xi = tuple(s - d for s, d in zip(shift, delta))
        if any(c < 0 for c in xi):
            continue
        for u in upper_global_vectors(mod, xi):
            d = matrix_coefficient(top, u)
            if d.is_zero():
                continue
            exp = dcb_expand(star(d))
            if len(exp) != 1 or not next(iter(exp.values())).is_one():
                raise ModuleError("matrix coefficient is not a dual canonical element")
            labels.add(next(iter(exp)))
    return labels


def kumar_peterson_check(w: WeylElt, lams, max_height: int) -> dict:
    """Compare the union over lams with B(U_q^-(w)) up to max_height."""
    from .canonical import basis_in_subalgebra, degrees_up_to
    rd = w.rd
    lhs = set()
    for lam in lams:
        lhs |= kumar_peterson_labels(w, lam, max_height)
    rhs = set()
    for xi in degrees_up_to(rd, max_height):
        rhs |= set(basis_in_subalgebra(rd, w.word, xi))
    return {"equal": lhs == rhs, "missing": sorted(rhs - lhs, key=lambda b: b.c),
            "extra": sorted(lhs - rhs, key=lambda b: b.c), "size": len(rhs)}
