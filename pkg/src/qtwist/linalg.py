"""Dense exact linear algebra over Q(v) and modular helpers for rank tests."""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar


class SingularError(ArithmeticError):
    pass


class InconsistentError(ArithmeticError):
    pass


def _pivot_cost(s: Scalar) -> int:
    if s.is_zero():
        return 1 << 30
    cost = s.num.degree()
    if s.den is not None:
        cost += 2 * s.den.degree() + 4
    return cost


def row_reduce(rows: list[list[Scalar]], ncols: int):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        best, best_cost = None, None
        for k in range(r, nrows):
            cost = _pivot_cost(rows[k][c])
            if cost < (1 << 30) and (best is None or cost < best_cost):
                best, best_cost = k, cost
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        if not piv.is_one():
            inv = piv.inverse()
            rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        pr = rows[r]
        for k in range(nrows):
            if k != r:
                f = rows[k][c]
                if not f.is_zero():
                    rows[k] = [a - f * b if not b.is_zero() else a
                               for a, b in zip(rows[k], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def inverse(mat: list[list[Scalar]]) -> list[list[Scalar]]:
    n = len(mat)
    rows = [list(mat[i]) + [ONE if j == i else ZERO for j in range(n)]
            for i in range(n)]
    piv = row_reduce(rows, n)
    if len(piv) < n:
        raise SingularError("matrix is singular")
    return [row[n:] for row in rows]


def mat_vec(mat, vec) -> list[Scalar]:
    out = []
    for row in mat:
        acc = ZERO
        for a, b in zip(row, vec):
            if not a.is_zero() and not b.is_zero():
                acc = acc + a * b
        out.append(acc)
    return out


def split_denominator(entries) -> tuple[list[Scalar], Scalar]:
    """Laurent numerators and one common denominator: entries[k] = nums[k] / den."""
    den = None
    for x in entries:
        if x.den is not None:
            if den is None:
                den = x.den
            else:
                den = den * x.den // den.gcd(x.den)
    if den is None:
        return list(entries), ONE
    d = Scalar(den)
    return [x * d if not x.is_zero() else x for x in entries], d


class CommonDenominatorMatrix:
    """A matrix over Q(v) stored as a Laurent matrix over one denominator.

    Applying it to a vector needs only Laurent arithmetic plus one
    normalization per output entry.
    """

    def __init__(self, mat: list[list[Scalar]]):
        flat = [x for row in mat for x in row]
        nums, self.den = split_denominator(flat)
        n = len(mat[0]) if mat else 0
        self.rows = [nums[k * n:(k + 1) * n] for k in range(len(mat))]

    def apply(self, vec) -> list[Scalar]:
        vnums, vden = split_denominator(vec)
        scale = (self.den * vden).inverse()
        out = []
        for row in self.rows:
            acc = ZERO
            for a, b in zip(row, vnums):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc * scale if not acc.is_zero() else acc)
        return out


def mat_mul(a, b):
    bt = list(zip(*b)) if b else []
    return [[_dot(row, col) for col in bt] for row in a]


def _dot(u, v) -> Scalar:
    acc = ZERO
    for a, b in zip(u, v):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc


def solve(mat: list[list[Scalar]], rhs: list[Scalar]) -> list[Scalar]:
    """One solution of mat x = rhs (any shape); raises if inconsistent."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rows = [list(mat[i]) + [rhs[i]] for i in range(nrows)]
    piv = row_reduce(rows, ncols)
    for k in range(len(piv), nrows):
        if not rows[k][ncols].is_zero():
            raise InconsistentError("linear system has no solution")
    x = [ZERO] * ncols
    for k, c in enumerate(piv):
        x[c] = rows[k][ncols]
    return x


def rank(mat: list[list[Scalar]]) -> int:
    if not mat:
        return 0
    rows = [list(r) for r in mat]
    return len(row_reduce(rows, len(mat[0])))


PRIME = (1 << 61) - 1


class ModularGram:
    """Incremental Gram-rank test over F_p (Schur complement updates)."""

    def __init__(self):
        self.inv: list[list[int]] = []

    def __len__(self):
        return len(self.inv)

    def try_add(self, cross: list[int], diag: int) -> bool:
        p = PRIME
        n = len(self.inv)
        inv = self.inv
        t = [sum(inv[i][j] * cross[j] for j in range(n)) % p for i in range(n)]
        schur = (diag - sum(cross[i] * t[i] for i in range(n))) % p
        if schur == 0:
            return False
        s_inv = pow(schur, p - 2, p)
        new = [[(inv[i][j] + t[i] * t[j] * s_inv) % p for j in range(n)]
               + [(-t[i] * s_inv) % p] for i in range(n)]
        new.append([(-t[j] * s_inv) % p for j in range(n)] + [s_inv])
        self.inv = new
        return True
