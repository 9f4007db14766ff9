"""The negative half U_q^- as word combinations in the generators f_i.

Relations are never rewritten.  Two elements are equal when their difference
pairs to zero with every monomial, i.e. lies in the radical of the Lusztig
pairing, which is the quantum Serre ideal.  Per degree we pick a monomial
basis of the quotient by greedy Gram-rank pivoting and express everything
in that basis.

Degrees are elements xi of Q_+ in simple-root coordinates; an element of
degree xi has weight -xi.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from . import linalg
from .config import check_height
from .rootdata import RootDatum
from .scalars import ONE, ZERO, Scalar, as_scalar, qfactorial, qpow

Word = tuple[int, ...]

_GEN = 1234567891


def word_degree(rd: RootDatum, word: Word) -> tuple[int, ...]:
    out = [0] * rd.rank
    for i in word:
        out[i] += 1
    return tuple(out)


def words_of_degree(xi: tuple[int, ...]) -> Iterator[Word]:
    """All words with letter multiplicities xi, in lex order."""
    xi = list(xi)
    n = sum(xi)
    buf: list[int] = []

    def rec():
        if len(buf) == n:
            yield tuple(buf)
            return
        for i, c in enumerate(xi):
            if c:
                xi[i] -= 1
                buf.append(i)
                yield from rec()
                buf.pop()
                xi[i] += 1

    yield from rec()


class WordForm:
    """A symmetric form on words with K(f_i x, y) = K(x, D_i y).

    D_i deletes one letter i from a word with a position dependent scalar.
    Subclasses supply that scalar exactly and modulo a prime.
    """

    def __init__(self, rd: RootDatum):
        self.rd = rd
        self._pair = lru_cache(maxsize=None)(self._pair_impl)
        self._pair_mod = lru_cache(maxsize=None)(self._pair_mod_impl)
        self._spaces: dict = {}

    # subclass hooks ---------------------------------------------------
    def coeff_key(self, i: int, word: Word, k: int):
        raise NotImplementedError

    def coeff_exact(self, key) -> Scalar:
        raise NotImplementedError

    def coeff_mod(self, key) -> int:
        raise NotImplementedError

    def target_dim(self, xi) -> int | None:
        return None

    # derivation -------------------------------------------------------
    def derive_word(self, i: int, word: Word):
        for k, j in enumerate(word):
            if j == i:
                yield word[:k] + word[k + 1:], self.coeff_key(i, word, k)

    def derive(self, i: int, terms: Mapping[Word, Scalar]) -> dict[Word, Scalar]:
        out: dict[Word, Scalar] = {}
        for w, c in terms.items():
            for w2, key in self.derive_word(i, w):
                val = c * self.coeff_exact(key)
                prev = out.get(w2)
                out[w2] = val if prev is None else prev + val
        return {w: c for w, c in out.items() if not c.is_zero()}

    # word pairings ----------------------------------------------------
    def _pair_impl(self, w1: Word, w2: Word) -> Scalar:
        if not w1:
            return ONE if not w2 else ZERO
        i, rest = w1[0], w1[1:]
        acc = ZERO
        for w3, key in self.derive_word(i, w2):
            val = self._pair(rest, w3)
            if not val.is_zero():
                acc = acc + self.coeff_exact(key) * val
        return acc

    def _pair_mod_impl(self, w1: Word, w2: Word) -> int:
        if not w1:
            return 1 if not w2 else 0
        i, rest = w1[0], w1[1:]
        acc = 0
        for w3, key in self.derive_word(i, w2):
            val = self._pair_mod(rest, w3)
            if val:
                acc += self.coeff_mod(key) * val
        return acc % linalg.PRIME

    def pair_words(self, w1: Word, w2: Word) -> Scalar:
        if len(w1) != len(w2):
            return ZERO
        return self._pair(tuple(w1), tuple(w2))

    # weight spaces ----------------------------------------------------
    def space(self, xi) -> "WeightSpace":
        xi = tuple(xi)
        sp = self._spaces.get(xi)
        if sp is None:
            check_height(sum(xi))
            sp = WeightSpace(self, xi)
            self._spaces[xi] = sp
        return sp


class WeightSpace:
    """Monomial basis, Gram matrix and coordinate map for one degree."""

    def __init__(self, form: WordForm, xi: tuple[int, ...]):
        self.form = form
        self.xi = xi
        target = form.target_dim(xi)
        chosen: list[Word] = []
        gram = linalg.ModularGram()
        if all(c >= 0 for c in xi):
            for w in words_of_degree(xi):
                if target is not None and len(chosen) >= target:
                    break
                cross = [form._pair_mod(b, w) for b in chosen]
                if gram.try_add(cross, form._pair_mod(w, w)):
                    chosen.append(w)
        if target is not None and len(chosen) != target:
            raise ArithmeticError(
                f"degree {xi}: found {len(chosen)} independent monomials, "
                f"expected {target}")
        self.basis: list[Word] = chosen
        self.index = {w: k for k, w in enumerate(chosen)}
        self.gram = [[form.pair_words(a, b) for b in chosen] for a in chosen]
        self.gram_inv = linalg.inverse(self.gram) if chosen else []
        self.gram_solver = linalg.CommonDenominatorMatrix(self.gram_inv)
        self._word_coords: dict[Word, list[Scalar]] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pairing_vector_word(self, w: Word) -> list[Scalar]:
        return [self.form.pair_words(b, w) for b in self.basis]

    def word_coords(self, w: Word) -> list[Scalar]:
        c = self._word_coords.get(w)
        if c is None:
            k = self.index.get(w)
            if k is not None:
                c = [ONE if j == k else ZERO for j in range(self.dim)]
            else:
                c = self.gram_solver.apply(self.pairing_vector_word(w))
            self._word_coords[w] = c
        return c

    def coords(self, terms: Mapping[Word, Scalar]) -> list[Scalar]:
        acc = [ZERO] * self.dim
        for w, c in terms.items():
            if c.is_zero():
                continue
            for k, x in enumerate(self.word_coords(w)):
                if not x.is_zero():
                    acc[k] = acc[k] + c * x
        return acc

    def from_coords(self, coords) -> dict[Word, Scalar]:
        return {w: c for w, c in zip(self.basis, coords) if not c.is_zero()}

    def form_coords(self, a, b) -> Scalar:
        """K(x, y) for x, y given by coordinates."""
        acc = ZERO
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            row = self.gram[i]
            for j, y in enumerate(b):
                if not y.is_zero() and not row[j].is_zero():
                    acc = acc + x * row[j] * y
        return acc


class LusztigForm(WordForm):
    """K with (x, y)_L = K(x, y) * prod_i (1 - q_i^2)^(-xi_i)."""

    def coeff_key(self, i, word, k):
        # q_i^{<h_i, wt(prefix)>} = q^{(alpha_i, wt prefix)}
        rd = self.rd
        return -sum(rd.d(i) * rd.a(i, j) for j in word[:k])

    def derive_word(self, i, word):
        # running prefix sum of the keys
        row = self._form_row(i)
        s = 0
        for k, j in enumerate(word):
            if j == i:
                yield word[:k] + word[k + 1:], -s
            s += row[j]

    def _form_row(self, i):
        rows = self.__dict__.get("_rows")
        if rows is None:
            rd = self.rd
            rows = [[rd.d(a) * rd.a(a, b) for b in range(rd.rank)] for a in range(rd.rank)]
            self._rows = rows
        return rows[i]

    @staticmethod
    @lru_cache(maxsize=None)
    def coeff_exact(key):
        return qpow(key)

    @staticmethod
    @lru_cache(maxsize=None)
    def coeff_mod(key):
        return pow(_GEN, 2 * key, linalg.PRIME)

    def target_dim(self, xi):
        return self.rd.kostant_partition(xi)


class RightLusztigForm(LusztigForm):
    """Derivations from the right end of the word: the maps _i e'."""

    def coeff_key(self, i, word, k):
        rd = self.rd
        return -sum(rd.d(i) * rd.a(i, j) for j in word[k + 1:])

    def derive_word(self, i, word):
        row = self._form_row(i)
        s = 0
        out = []
        for k in range(len(word) - 1, -1, -1):
            j = word[k]
            if j == i:
                out.append((word[:k] + word[k + 1:], -s))
            s += row[j]
        return reversed(out)


@lru_cache(maxsize=None)
def algebra(rd: RootDatum) -> "UMinus":
    return UMinus(rd)


class UMinus:
    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.form = LusztigForm(rd)
        self.right = RightLusztigForm(rd)

    def norm_factor(self, xi) -> Scalar:
        """prod_i (1 - q_i^2)^(-xi_i)."""
        return _norm_factor(self.rd, tuple(xi))

    def space(self, xi) -> WeightSpace:
        return self.form.space(xi)

    def gen(self, i: int) -> "NCElement":
        return NCElement(self.rd, {(i,): ONE})

    def one(self) -> "NCElement":
        return NCElement(self.rd, {(): ONE})

    def zero(self) -> "NCElement":
        return NCElement(self.rd, {})

    def divided_power(self, i: int, n: int) -> "NCElement":
        return NCElement(self.rd, {(i,) * n: qfactorial(n, self.rd.d(i)).inverse()})

    def monomial(self, word: Iterable[int]) -> "NCElement":
        return NCElement(self.rd, {tuple(word): ONE})


@lru_cache(maxsize=None)
def _norm_factor(rd: RootDatum, xi) -> Scalar:
    out = ONE
    for i, c in enumerate(xi):
        if c:
            out = out * ((ONE - qpow(2 * rd.d(i))) ** c).inverse()
    return out


class NCElement:
    """Finite combination of words in f_i with Scalar coefficients."""

    __slots__ = ("rd", "terms")

    def __init__(self, rd: RootDatum, terms: Mapping[Word, Scalar] | None = None):
        self.rd = rd
        clean = {}
        for w, c in (terms or {}).items():
            c = as_scalar(c)
            if not c.is_zero():
                clean[tuple(w)] = c
        self.terms = clean

    # grading ----------------------------------------------------------
    def components(self) -> dict[tuple[int, ...], "NCElement"]:
        comps: dict[tuple[int, ...], dict] = {}
        for w, c in self.terms.items():
            comps.setdefault(word_degree(self.rd, w), {})[w] = c
        return {xi: NCElement(self.rd, t) for xi, t in comps.items()}

    def degree(self) -> tuple[int, ...]:
        """xi with wt = -xi; requires a homogeneous element."""
        degs = {word_degree(self.rd, w) for w in self.terms}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        if not degs:
            return (0,) * self.rd.rank
        return degs.pop()

    def weight(self) -> tuple[int, ...]:
        return tuple(-c for c in self.degree())

    def is_homogeneous(self) -> bool:
        return len({word_degree(self.rd, w) for w in self.terms}) <= 1

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            out[w] = c if prev is None else prev + c
        return NCElement(self.rd, out)

    def __neg__(self):
        return NCElement(self.rd, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "NCElement":
        s = as_scalar(s)
        if s.is_zero():
            return NCElement(self.rd, {})
        return NCElement(self.rd, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCElement):
            return nc_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = algebra(self.rd).one()
        for _ in range(n):
            out = nc_mul(out, self).reduced()
        return out

    # canonical form ---------------------------------------------------
    def coords(self) -> dict[tuple[int, ...], list[Scalar]]:
        alg = algebra(self.rd)
        out = {}
        for xi, comp in self.components().items():
            sp = alg.space(xi)
            c = sp.coords(comp.terms)
            if any(not x.is_zero() for x in c):
                out[xi] = c
        return out

    def reduced(self) -> "NCElement":
        """Same element rewritten in the chosen monomial bases."""
        alg = algebra(self.rd)
        out = {}
        for xi, c in self.coords().items():
            out.update(alg.space(xi).from_coords(c))
        return NCElement(self.rd, out)

    def is_zero(self) -> bool:
        return not self.coords()

    def __eq__(self, other):
        if not isinstance(other, NCElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"NCElement({format_element(self)})"

    def __str__(self):
        return format_element(self)

    # json -------------------------------------------------------------
    def to_json(self) -> dict:
        terms = sorted(self.terms.items())
        weight = list(self.weight()) if self.is_homogeneous() and terms else None
        return {"weight": weight,
                "terms": [{"word": [i + 1 for i in w], "coeff": str(c)}
                          for w, c in terms]}

    @staticmethod
    def from_json(rd: RootDatum, data) -> "NCElement":
        if isinstance(data, str):
            data = json.loads(data)
        terms = {}
        for t in data["terms"]:
            w = tuple(int(i) - 1 for i in t["word"])
            terms[w] = terms.get(w, ZERO) + as_scalar(str(t["coeff"]))
        el = NCElement(rd, terms)
        if data.get("weight") is not None and el.terms:
            if list(el.weight()) != list(data["weight"]):
                raise ValueError("weight field does not match the terms")
        return el


def format_element(x: NCElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for w, c in sorted(x.terms.items()):
        mono = "*".join(f"f{i + 1}" for i in w) or "1"
        cs = str(c)
        if mono == "1":
            parts.append(cs)
        elif c.is_one():
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        else:
            parts.append(f"({cs})*{mono}")
    return " + ".join(parts)


def parse_element(rd: RootDatum, text: str) -> NCElement:
    """Parse sums of products such as 'f1*f2 - q*f2*f1' or '(1-q^2)*f1'."""
    import ast
    src = text.strip().replace("^", "**")
    tree = ast.parse(src, mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Name):
            name = node.id
            if name.startswith("f") and name[1:].isdigit():
                i = int(name[1:]) - 1
                if not 0 <= i < rd.rank:
                    raise ValueError(f"no generator {name}")
                return NCElement(rd, {(i,): ONE})
            if name in ("q", "v"):
                return NCElement(rd, {(): as_scalar(name)})
            raise ValueError(f"unknown symbol {name}")
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return NCElement(rd, {(): as_scalar(node.value)})
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.UAdd):
            return ev(node.operand)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = node.left
                if isinstance(base, ast.Name) and base.id in ("q", "v"):
                    seg = ast.unparse(node).replace("**", "^")
                    return NCElement(rd, {(): as_scalar(seg)})
                n = ev_int(node.right)
                return ev(base) ** n
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return nc_mul(a, b)
            if isinstance(node.op, ast.Div):
                if set(b.terms) != {()}:
                    raise ValueError("can only divide by scalars")
                return a.scale(b.terms[()].inverse())
        raise ValueError("unsupported syntax in element")

    def ev_int(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        raise ValueError("exponent must be an integer")

    return ev(tree)


# operations ------------------------------------------------------------

def nc_mul(x: NCElement, y: NCElement) -> NCElement:
    out: dict[Word, Scalar] = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            w = w1 + w2
            val = c1 * c2
            prev = out.get(w)
            out[w] = val if prev is None else prev + val
    return NCElement(x.rd, out)


def q_derivation(i: int, x: NCElement, side: str = "left") -> NCElement:
    """e'_i (side='left') or _i e' (side='right')."""
    alg = algebra(x.rd)
    form = alg.form if side == "left" else alg.right
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return NCElement(x.rd, form.derive(i, x.terms))


def lusztig_pair(x: NCElement, y: NCElement) -> Scalar:
    alg = algebra(x.rd)
    xc = x.components()
    total = ZERO
    for xi, yc in y.components().items():
        if xi not in xc:
            continue
        sp = alg.space(xi)
        k = sp.form_coords(sp.coords(xc[xi].terms), sp.coords(yc.terms))
        if not k.is_zero():
            total = total + k * alg.norm_factor(xi)
    return total


def star(x: NCElement) -> NCElement:
    return NCElement(x.rd, {tuple(reversed(w)): c for w, c in x.terms.items()})


def bar(x: NCElement) -> NCElement:
    return NCElement(x.rd, {w: c.bar() for w, c in x.terms.items()})


def sigma_twist_exponent(rd: RootDatum, xi) -> int:
    """(wt, wt)/2 - (wt, rho) for wt = -xi."""
    return rd.root_form(xi, xi) // 2 + sum(xi[i] * rd.d(i) for i in range(rd.rank))


def involution(x: NCElement, kind: str) -> NCElement:
    if kind == "star":
        return star(x)
    if kind == "bar":
        return bar(x)
    if kind not in ("sigma", "sigma_prime"):
        raise ValueError(f"unknown involution {kind!r}")
    out = NCElement(x.rd, {})
    for xi, comp in x.components().items():
        sign = -1 if sum(xi) % 2 else 1
        s = as_scalar(sign)
        if kind == "sigma":
            s = s * qpow(sigma_twist_exponent(x.rd, xi))
        out = out + bar(star(comp)).scale(s)
    return out


def sigma(x: NCElement) -> NCElement:
    return involution(x, "sigma")


def weight_basis_coords(xi, x: NCElement) -> list[Scalar]:
    """Coordinates of the degree-xi component of x (xi in Q_+ coordinates)."""
    xi = tuple(abs(c) for c in xi)
    sp = algebra(x.rd).space(xi)
    comp = x.components().get(xi)
    if comp is None:
        return [ZERO] * sp.dim
    return sp.coords(comp.terms)
