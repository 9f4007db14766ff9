"""Independent sympy computations of the reference values frozen into the tests.

Nothing here imports qtwist.  Elements of U_q^- are dicts word -> sympy
expression; the pairing is computed by the derivation recursion directly on
words, and module dimensions come from the Weyl character formula.

    python scripts/derive_oracles.py
"""

from itertools import permutations, product

import sympy as sp

q = sp.symbols("q")

CARTAN = {
    "A1": ([[2]], [1]),
    "A2": ([[2, -1], [-1, 2]], [1, 1]),
    "A3": ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 1, 1]),
    "B2": ([[2, -1], [-2, 2]], [2, 1]),
}


def simplify(x):
    return sp.factor(sp.cancel(sp.together(x)))


# root data ------------------------------------------------------------------

def sym_matrix(name):
    a, d = CARTAN[name]
    n = len(d)
    return sp.Matrix(n, n, lambda i, j: d[i] * a[i][j])


def fundamental_in_roots(name):
    a, d = CARTAN[name]
    # varpi_i = sum_j (A^{-T})_{ij} alpha_j with a_ij = <h_i, alpha_j>
    return sp.Matrix(a).T.inv()


def weight_form(name, lam, mu):
    f = fundamental_in_roots(name)
    x = sp.Matrix([lam]) * f
    y = sp.Matrix([mu]) * f
    return (x * sym_matrix(name) * y.T)[0, 0]


def reflect(name, i, lam):
    a, _ = CARTAN[name]
    # s_i lam = lam - <h_i, lam> alpha_i, alpha_i in weight coords is row i of A^T
    return tuple(lam[j] - lam[i] * a[j][i] for j in range(len(lam)))


def act(name, word, lam):
    for i in reversed(word):
        lam = reflect(name, i, lam)
    return lam


def longest_words(name):
    """Exhaustive search: words whose action sends rho to -rho, of minimal length."""
    a, _ = CARTAN[name]
    n = len(a)
    rho = tuple([1] * n)
    target = tuple(-c for c in rho)
    for length in range(1, 13):
        found = [w for w in product(range(n), repeat=length) if act(name, w, rho) == target]
        if found:
            return found
    raise RuntimeError("no longest element found")


# U_q^- on words -----------------------------------------------------------------

def qi(name, i):
    return q ** CARTAN[name][1][i]


def add(x, y, c=1):
    out = dict(x)
    for w, v in y.items():
        out[w] = out.get(w, 0) + c * v
    return {w: v for w, v in out.items() if sp.simplify(v) != 0}


def mul(x, y):
    out = {}
    for (a, u), (b, v) in product(x.items(), y.items()):
        out[a + b] = out.get(a + b, 0) + u * v
    return out


def gen(i):
    return {(i,): sp.Integer(1)}


def deriv_word(name, i, word):
    """e'_i by e'_i(xy) = e'_i(x) y + q_i^{<h_i, wt x>} x e'_i(y), splitting off the first letter."""
    a, d = CARTAN[name]
    if not word:
        return {}
    head, tail = word[0], word[1:]
    out = {}
    if head == i:
        out[tail] = sp.Integer(1)
    # <h_i, wt f_head> = -a_{i,head}
    factor = qi(name, i) ** (-a[i][head])
    for w, c in deriv_word(name, i, tail).items():
        out[(head,) + w] = out.get((head,) + w, 0) + factor * c
    return out


def deriv(name, i, x):
    out = {}
    for w, c in x.items():
        for w2, c2 in deriv_word(name, i, w).items():
            out[w2] = out.get(w2, 0) + c * c2
    return out


def pair_words(name, w1, w2):
    if len(w1) != len(w2):
        return 0
    if not w1:
        return sp.Integer(1)
    i = w1[0]
    return sum((c * pair_words(name, w1[1:], w3) for w3, c in deriv_word(name, i, w2).items()),
               sp.Integer(0)) / (1 - qi(name, i) ** 2)


def pair(name, x, y):
    return simplify(sum((a * b * pair_words(name, u, v) for (u, a), (v, b) in product(x.items(), y.items())),
                        sp.Integer(0)))


def words_of(xi):
    letters = [i for i, c in enumerate(xi) for _ in range(c)]
    return sorted(set(permutations(letters)))


def divided(name, i, n):
    fact = sp.Integer(1)
    for k in range(1, n + 1):
        fact *= (qi(name, i) ** k - qi(name, i) ** (-k)) / (qi(name, i) - 1 / qi(name, i))
    return {(i,) * n: 1 / fact}


def braid_f(name, i, j):
    """T_i(f_j) for j != i."""
    a, _ = CARTAN[name]
    m = -a[i][j]
    out = {}
    for r in range(m + 1):
        s = m - r
        term = mul(mul(divided(name, i, r), gen(j)), divided(name, i, s))
        out = add(out, term, (-1) ** r * qi(name, i) ** r)
    return {w: simplify(c) for w, c in out.items()}


def bar_star(x):
    return {tuple(reversed(w)): c.subs(q, 1 / q) for w, c in x.items()}


def sigma(name, x, xi):
    """(-1)^ht q^{(wt,wt)/2 - (wt,rho)} bar(*(x)) for x of degree xi (wt = -xi)."""
    b = sym_matrix(name)
    v = sp.Matrix([xi])
    norm = (v * b * v.T)[0, 0] / 2
    wt_rho = -sum(xi[k] * CARTAN[name][1][k] for k in range(len(xi)))
    e = norm - wt_rho
    return {w: simplify((-1) ** sum(xi) * q ** e * c) for w, c in bar_star(x).items()}


def same(name, x, y, xi):
    """x == y in U_q^- (equal pairings against every word of degree xi)."""
    return all(pair(name, add(x, y, -1), {w: 1}) == 0 for w in words_of(xi))


# Weyl character formula ----------------------------------------------------------

def multiplicity(name, lam, mu):
    """dim V(lam)_mu by Freudenthal's recursion over dominant data."""
    a, d = CARTAN[name]
    n = len(a)
    pos = positive_roots(name)
    rho = tuple([1] * n)
    cache = {}

    def alpha_w(r):
        return tuple(sum(r[k] * a[j][k] for k in range(n)) for j in range(n))

    def m(nu):
        if nu in cache:
            return cache[nu]
        if nu == tuple(lam):
            return 1
        total = 0
        for r in pos:
            aw = alpha_w(r)
            k = 1
            while True:
                nu2 = tuple(nu[j] + k * aw[j] for j in range(n))
                if not below(name, lam, nu2):
                    break
                total += m(nu2) * weight_form(name, nu2, aw)
                k += 1
        lr = tuple(lam[j] + rho[j] for j in range(n))
        nr = tuple(nu[j] + rho[j] for j in range(n))
        den = weight_form(name, lr, lr) - weight_form(name, nr, nr)
        val = 0 if den == 0 else 2 * total / den
        cache[nu] = val
        return val

    return m(tuple(mu)) if below(name, lam, mu) else 0


def below(name, lam, mu):
    a, _ = CARTAN[name]
    diff = sp.Matrix([l - m for l, m in zip(lam, mu)])
    coeffs = sp.Matrix(a).inv() * diff
    return all(c.is_integer and c >= 0 for c in coeffs)


def positive_roots(name):
    a, _ = CARTAN[name]
    n = len(a)
    roots = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    grew = True
    while grew:
        grew = False
        for r in list(roots):
            for i in range(n):
                pairing = sum(a[i][k] * r[k] for k in range(n))
                s = tuple(r[j] - pairing * (i == j) for j in range(n))
                if all(c >= 0 for c in s) and s not in roots:
                    roots.add(s)
                    grew = True
    return sorted(roots)


def main():
    def show(key, value):
        print(f"{key}: {value}")

    # scalars
    show("sum q/(1-q^2) + q^2/(1-q^2)", simplify(q / (1 - q**2) + q**2 / (1 - q**2)))
    show("bar 1/(1-q^2)", simplify((1 / (1 - q**2)).subs(q, 1 / q)))
    show("at q=1 (1-q^4)/(1-q^2)", sp.limit((1 - q**4) / (1 - q**2), q, 1))

    # root data
    show("A2 (w1,w1)", weight_form("A2", (1, 0), (1, 0)))
    show("A2 (a1+a2,a1+a2)", (sp.Matrix([[1, 1]]) * sym_matrix("A2") * sp.Matrix([[1, 1]]).T)[0, 0])
    show("A2 w0 w1", act("A2", longest_words("A2")[0], (1, 0)))
    show("B2 w0 w1", act("B2", longest_words("B2")[0], (1, 0)))
    show("A2 I(w0)", [tuple(i + 1 for i in w) for w in longest_words("A2")])
    show("A3 |I(w0)|", len(longest_words("A3")))
    show("B2 l(w0)", len(longest_words("B2")[0]))

    # U_q^-
    f1f2f1 = {(0, 1, 0): sp.Integer(1)}
    show("A2 e'_1(f1 f2 f1)", {tuple(i + 1 for i in w): simplify(c) for w, c in deriv("A2", 0, f1f2f1).items()})
    show("A2 (f1f2, f2f1)", pair("A2", {(0, 1): 1}, {(1, 0): 1}))
    for name in ("A2", "B2"):
        for i in range(2):
            show(f"{name} sigma(f{i + 1})/f{i + 1}", sigma(name, gen(i), tuple(int(k == i) for k in range(2)))[(i,)])
    serre = add(add({(0, 0, 1): 1}, {(0, 1, 0): 1}, -(q + 1 / q)), {(1, 0, 0): 1})
    show("A2 Serre element pairs to zero", all(pair("A2", serre, {w: 1}) == 0 for w in words_of((2, 1))))
    gram = sp.Matrix([[pair_words("A2", u, v) for v in words_of((1, 1))] for u in words_of((1, 1))])
    show("A2 rank at a1+a2", gram.rank(simplify=True))

    # braid operators and PBW
    t1f2 = braid_f("A2", 0, 1)
    show("A2 T1(f2)", {tuple(i + 1 for i in w): c for w, c in t1f2.items()})
    show("A2 (f2, f1) (f2 has no f1-part)", pair("A2", {(1,): 1}, {(0,): 1}))
    show("A2 (T1 f2, T1 f2)", pair("A2", t1f2, t1f2))

    # dual canonical elements
    g = {w: simplify((1 - q**2) * c) for w, c in t1f2.items()}
    show("A2 G(0,1,0) sigma-fixed", same("A2", sigma("A2", g, (1, 1)), g, (1, 1)))
    gf1 = {(0,): 1 - q**2}
    show("A2 eps_1 of (1-q^2)f1: e'_1 once nonzero, twice zero",
         (deriv("A2", 0, gf1) != {}, deriv("A2", 0, deriv("A2", 0, gf1)) == {}))
    show("A2 f2 against f1-powers", pair("A2", {(1,): 1}, {(0,): 1}))

    # modules
    show("A2 dim V(w1)_{w1-a1-a2}", multiplicity("A2", (1, 0), (0, -1)))
    show("A2 dim V(rho)_{rho-a1-a2}", multiplicity("A2", (1, 1), (0, 0)))
    show("A2 dim V(rho)", sum(multiplicity("A2", (1, 1), mu)
                               for mu in product(range(-3, 4), repeat=2)))
    show("A1 dim V(w)", sum(multiplicity("A1", (1,), (m,)) for m in range(-3, 4)))

    # extremal exponents a_k = <h_{i_k}, s_{i_{k+1}}...s_{i_l} lam>
    word = (0, 1, 0)
    show("A2 extremal exponents w0 (1,2,1), w1",
         tuple(act("A2", word[k + 1:], (1, 0))[word[k]] for k in range(3)))

    # cells
    show("A1 (w + w0 w, -a)", weight_form("A1", (0,), (-2,)))
    show("A1 (w, w0 w - w)", weight_form("A1", (1,), (-2,)))
    wt = (-2, 1)  # -alpha_1 in weight coordinates
    w0wt = act("A2", longest_words("A2")[0], wt)
    s = tuple(x + y for x, y in zip(wt, w0wt))
    show("A2 eta^6 exponent on f1", weight_form("A2", s, wt))
    show("A2 eta^6 minor weight on f1", tuple(-c for c in s))

    # compatible pairs: E^{(1)} for B~ = (0, 1)^T, lambda_21 = 1
    lam = sp.Matrix([[0, -1], [1, 0]])
    btilde = sp.Matrix([[0], [1]])
    # E^{(k)}: identity except column k, with e_kk = -1 and e_ik = max(0, -b_ik)
    e = sp.Matrix([[-1, 0], [max(0, -btilde[1, 0]), 1]])
    show("mu_1(lambda)", (e.T * lam * e).tolist())


if __name__ == "__main__":
    main()
