"""Exact elements of Q(v) with v = q^(1/2).

A Scalar is stored as v**shift * num / den where num and den are fmpq_poly
in v, den is monic with nonzero constant term, num has nonzero constant
term (or is zero) and gcd(num, den) = 1.  That form is unique, so equality
is a field-by-field comparison.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly

_ONE_POLY = fmpq_poly([1])


class ScalarError(ArithmeticError):
    pass


def _valuation(p: fmpq_poly) -> int:
    if p[0] != 0:
        return 0
    for k in range(1, p.degree() + 1):
        if p[k] != 0:
            return k
    raise ValueError("valuation of zero")


def _strip(p: fmpq_poly) -> tuple[fmpq_poly, int]:
    k = _valuation(p)
    return (p.right_shift(k) if k else p), k


class Scalar:
    __slots__ = ("num", "den", "shift", "_hash")

    def __init__(self, num, den=None, shift=0, _canonical=False):
        if not isinstance(num, fmpq_poly):
            num = fmpq_poly([num])
        if _canonical:
            self.num, self.den, self.shift = num, den, shift
            self._hash = None
            return
        if den is not None and not isinstance(den, fmpq_poly):
            den = fmpq_poly([den])
        self._set(num, den, shift)

    def _set(self, num, den, shift):
        self._hash = None
        if num.is_zero():
            self.num, self.den, self.shift = num, None, 0
            return
        num, k = _strip(num)
        shift += k
        if den is not None:
            if den.is_zero():
                raise ScalarError("division by zero")
            den, k = _strip(den)
            shift -= k
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
            if den.is_one():
                den = None
        self.num, self.den, self.shift = num, den, shift

    # constructors -----------------------------------------------------
    @staticmethod
    def v_power(k: int, coeff=1) -> "Scalar":
        if coeff == 0:
            return ZERO
        if isinstance(coeff, Fraction):
            coeff = fmpq(coeff.numerator, coeff.denominator)
        return Scalar(fmpq_poly([coeff]), None, k, _canonical=True)

    @staticmethod
    def q_power(k, coeff=1) -> "Scalar":
        k2 = Fraction(k) * 2
        if k2.denominator != 1:
            raise ScalarError(f"q-exponent {k} is not a half-integer")
        return Scalar.v_power(int(k2), coeff)

    @staticmethod
    def from_q_coeffs(coeffs: dict) -> "Scalar":
        """Build a Laurent polynomial from {q-exponent: coefficient}."""
        if not coeffs:
            return ZERO
        ex = {int(Fraction(e) * 2): c for e, c in coeffs.items() if c != 0}
        if not ex:
            return ZERO
        lo = min(ex)
        arr = [0] * (max(ex) - lo + 1)
        for e, c in ex.items():
            arr[e - lo] = c
        return Scalar(fmpq_poly(arr), None, lo)

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den is None and self.shift == 0 and self.num.is_one()

    def is_laurent(self) -> bool:
        return self.den is None

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return (self.shift == other.shift and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shift, str(self.num), str(self.den)))
        return self._hash

    # arithmetic -------------------------------------------------------
    def __neg__(self):
        return Scalar(-self.num, self.den, self.shift, _canonical=True)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        s = min(self.shift, other.shift)
        a = self.num.left_shift(self.shift - s)
        b = other.num.left_shift(other.shift - s)
        if self.den is None and other.den is None:
            r = a + b
            if r.is_zero():
                return ZERO
            r, k = _strip(r)
            return Scalar(r, None, s + k, _canonical=True)
        da = self.den if self.den is not None else _ONE_POLY
        db = other.den if other.den is not None else _ONE_POLY
        if da == db:
            return Scalar(a + b, da, s)
        return Scalar(a * db + b * da, da * db, s)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den is None and other.den is None:
            return Scalar(self.num * other.num, None,
                          self.shift + other.shift, _canonical=True)
        da = self.den if self.den is not None else _ONE_POLY
        db = other.den if other.den is not None else _ONE_POLY
        return Scalar(self.num * other.num, da * db, self.shift + other.shift)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ScalarError("division by zero")
        den = self.den if self.den is not None else _ONE_POLY
        return Scalar(den, self.num, -self.shift)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        if other.num.is_zero():
            raise ScalarError("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # involutions and evaluation ---------------------------------------
    def bar(self) -> "Scalar":
        """Substitute v -> 1/v."""
        if self.num.is_zero():
            return self
        n = self.num.degree()
        num = fmpq_poly(list(reversed(self.num.coeffs())))
        shift = -self.shift - n
        if self.den is None:
            return Scalar(num, None, shift)
        d = self.den.degree()
        den = fmpq_poly(list(reversed(self.den.coeffs())))
        return Scalar(num, den, shift + d)

    def specialize(self) -> Fraction:
        """Evaluate at v = 1 (so q = 1)."""
        if self.den is not None and self.den(1) == 0:
            raise ScalarError("pole at q = 1")
        val = self.num(1)
        if self.den is not None:
            val = val / self.den(1)
        return Fraction(int(val.p), int(val.q))

    def v_coeffs(self) -> dict[int, Fraction]:
        """{v-exponent: coefficient}; only for Laurent polynomials."""
        if self.den is not None:
            raise ScalarError("not a Laurent polynomial")
        out = {}
        for k, c in enumerate(self.num.coeffs()):
            if c != 0:
                out[k + self.shift] = Fraction(int(c.p), int(c.q))
        return out

    def q_coeffs(self) -> dict[Fraction, Fraction]:
        return {Fraction(k, 2): c for k, c in self.v_coeffs().items()}

    def is_integral_laurent(self) -> bool:
        if self.den is not None:
            return False
        return all(c.denominator == 1 for c in self.v_coeffs().values())

    def single_term(self):
        """(q-exponent, coefficient) if this is c*q^k, else None."""
        if self.den is not None or self.num.is_zero():
            return None
        cs = self.v_coeffs()
        if len(cs) != 1:
            return None
        (k, c), = cs.items()
        return Fraction(k, 2), c

    # text -------------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def _poly_terms(p: fmpq_poly, shift: int) -> str:
    pieces = []
    for k, c in enumerate(p.coeffs()):
        if c == 0:
            continue
        c = Fraction(int(c.p), int(c.q))
        e = Fraction(k + shift, 2)
        if e == 0:
            mono = ""
        elif e == 1:
            mono = "q"
        elif e.denominator == 1:
            mono = f"q^{e.numerator}" if e > 0 else f"q^({e.numerator})"
        else:
            mono = f"q^({e.numerator}/{e.denominator})"
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono == "":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    s = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        s += f" {sign} {body}"
    return s


def format_scalar(a: Scalar) -> str:
    if a.num.is_zero():
        return "0"
    num = _poly_terms(a.num, a.shift)
    if a.den is None:
        return num
    den = _poly_terms(a.den, 0)
    if len(a.num.coeffs()) - list(a.num.coeffs()).count(0) > 1:
        num = f"({num})"
    return f"{num}/({den})"


_BINOPS = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b,
           ast.Mult: lambda a, b: a * b, ast.Div: lambda a, b: a / b}


def _exponent(node) -> Fraction:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        e = _exponent(node.operand)
        return -e if isinstance(node.op, ast.USub) else e
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Div):
        return _exponent(node.left) / _exponent(node.right)
    raise ValueError("unsupported exponent")


def _eval(node) -> Scalar:
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return as_scalar(node.value)
    if isinstance(node, ast.Name):
        if node.id == "q":
            return Q
        if node.id == "v":
            return V
        raise ValueError(f"unknown symbol {node.id!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval(node.operand)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = node.left
            e = _exponent(node.right)
            if isinstance(base, ast.Name) and base.id in ("q", "v"):
                k = e * 2 if base.id == "q" else e
                if k.denominator != 1:
                    raise ValueError("exponent must be a multiple of 1/2 in q")
                return Scalar.v_power(int(k))
            if e.denominator != 1:
                raise ValueError("fractional power of a compound expression")
            return _eval(base) ** int(e)
        op = _BINOPS.get(type(node.op))
        if op is not None:
            return op(_eval(node.left), _eval(node.right))
    raise ValueError("unsupported syntax in scalar")


@lru_cache(maxsize=4096)
def parse_scalar(text: str) -> Scalar:
    """Parse the text form, e.g. '(q + q^2)/(1 - q^2)' or 'q^(1/2)'."""
    src = text.strip().replace("^", "**")
    if not src:
        raise ValueError("empty scalar")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc
    return _eval(tree)


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return ZERO if x == 0 else Scalar(fmpq_poly([x]), None, 0, _canonical=True)
    if isinstance(x, Fraction):
        if x == 0:
            return ZERO
        return Scalar(fmpq_poly([fmpq(x.numerator, x.denominator)]), None, 0,
                      _canonical=True)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


def scalar_arith(a, b, op: str) -> Scalar:
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def scalar_bar(a) -> Scalar:
    return as_scalar(a).bar()


def scalar_specialize(a) -> Fraction:
    return as_scalar(a).specialize()


ZERO = Scalar(fmpq_poly([]), None, 0, _canonical=True)
ONE = Scalar(fmpq_poly([1]), None, 0, _canonical=True)
V = Scalar.v_power(1)
Q = Scalar.v_power(2)


def qpow(k) -> Scalar:
    """q**k for integer or half-integer k."""
    return Scalar.q_power(k)


def qint(n: int, step: int = 1) -> Scalar:
    """Quantum integer [n] in the variable q**step."""
    if n == 0:
        return ZERO
    sgn = 1 if n > 0 else -1
    n = abs(n)
    coeffs = {step * (n - 1 - 2 * k): 1 for k in range(n)}
    return Scalar.from_q_coeffs(coeffs) * sgn


def qfactorial(n: int, step: int = 1) -> Scalar:
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k, step)
    return out
