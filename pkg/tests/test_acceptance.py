"""Acceptance suite: one exact check per criterion, zero tolerance."""

import random
import resource
from contextlib import contextmanager
from itertools import product

from qtwist import clear_caches
from qtwist.canonical import (CrystalLabel, check_dual_canonical, degrees_up_to,
                              dual_canonical_basis)
from qtwist.cells import (CellElement, cell_sigma, dcp_embed, frozen, minor,
                          is_cell_basis_element, periodicity_check, periodicity_target,
                          specialize_coefficients, twist_auto, twist_auto_direct, twist_iso,
                          twist_power)
from qtwist.config import height_cap
from qtwist.highest_weight import kumar_peterson_check, quantum_minor
from qtwist.invariants import random_homogeneous, sample_cell_elements, sample_labels
from qtwist.pbw import check_braid_relations, exponents_up_to, pbw_degree, pbw_norm_closed, pbw_vector
from qtwist.qcluster import (check_compatible, compatibility_degrees, initial_seed,
                             mutate_compatible_pair, qgls_check, random_compatible_pair,
                             verify_exchange_in_algebra)
from qtwist.rootdata import cartan_type, enumerate_reduced_words
from qtwist.scalars import qpow
from qtwist.uqminus import lusztig_pair, parse_element

SEED = 20240517
A1, A2, B2 = cartan_type("A1"), cartan_type("A2"), cartan_type("B2")
LAMS_A2 = [(1, 0), (0, 1), (1, 1)]


def cell(rd, text):
    return CellElement.from_element(rd.longest_element(), parse_element(rd, text))


def test_1_pbw_norms_and_orthogonality():
    # B2 has roots of height 3, so |c| <= 4 reaches height 12
    with height_cap(12):
        _pbw_norms()


def _pbw_norms():
    for rd in (A1, A2, B2):
        for word in enumerate_reduced_words(rd.longest_element()):
            by_degree = {}
            for c in exponents_up_to(rd, word, 4):
                f = pbw_vector(c, word, rd)
                assert lusztig_pair(f, f) == pbw_norm_closed(c, word, rd), (rd, word, c)
                by_degree.setdefault(pbw_degree(rd, c, word), []).append((c, f))
            for group in by_degree.values():
                for (a, fa), (b, fb) in product(group, repeat=2):
                    if a < b:
                        assert lusztig_pair(fa, fb).is_zero(), (rd, word, a, b)


def test_2_braid_relations():
    for name in ("A2", "B2", "G2"):
        results = check_braid_relations(cartan_type(name))
        assert results and all(results.values()), name


def test_3_dual_canonical_word_independence():
    for xi in degrees_up_to(A2, 6):
        bases = []
        for word in [(0, 1, 0), (1, 0, 1)]:
            assert check_dual_canonical(A2, xi, word) == {"DCB1": True, "DCB2": True}
            bases.append([g for _, g in dual_canonical_basis(A2, xi, word)])
        a, b = bases
        assert len(a) == len(b)
        assert all(sum(x == y for y in b) == 1 for x in a), xi


def test_4_minor_identities():
    for name in ("A1", "A2", "B2", "G2"):
        rd = cartan_type(name)
        for i in range(rd.rank):
            s = rd.element_from_word((i,))
            expected = parse_element(rd, f"(1-q^{2 * rd.d(i)})*f{i + 1}")
            assert quantum_minor(s, rd.identity(), rd.fundamental(i)) == expected
    w0 = A2.longest_element()
    for word in enumerate_reduced_words(w0):
        for lam in LAMS_A2:
            n = tuple(lam[i] for i in word)
            expected = CrystalLabel.star_of(A2, word, n).element()
            assert quantum_minor(w0, A2.identity(), lam) == expected, (word, lam)


def test_5_q_centrality_and_single_term_localization():
    w0 = A2.longest_element()
    rng = random.Random(SEED)
    labels = rng.sample([b for b in sample_labels(A2, 4) if any(b.c)], 20)
    for lam in LAMS_A2:
        d = frozen(w0, lam)
        shift = tuple(a + b for a, b in zip(lam, w0.act(lam)))
        for b in labels:
            x = CellElement.from_element(w0, b.element())
            assert d * x == (x * d).scale(qpow(A2.pair_weight_root(shift, b.weight)))
            prod = (minor(w0, lam) * b.element()).scale(qpow(-A2.pair_weight_root(lam, b.weight)))
            single = CellElement.from_element(w0, prod).labels()
            assert len(single) == 1 and next(iter(single.values())).is_one(), (lam, b.c)


def _twist_theorems(rd, max_height, lams=None):
    rng = random.Random(SEED)
    pairs = [sample_cell_elements(rd, 2, rng, max_height, lams) for _ in range(20)]
    for x, y in pairs:
        assert twist_auto((x * y).canonical()) == twist_auto(x) * twist_auto(y), (x, y)
    for x, _ in pairs:
        eta = twist_auto(x)
        assert is_cell_basis_element(eta), x
        assert cell_sigma(eta) == twist_auto(cell_sigma(x)), x
        assert dcp_embed(twist_iso(x)) == eta == twist_auto_direct(x), x


def test_6_twist_theorems():
    with height_cap(40):
        _twist_theorems(A2, 3)
        _twist_theorems(B2, 2, [(0, 0), (1, 0), (0, 1)])


@contextmanager
def address_space_headroom(extra_bytes):
    """Cap the address space so exhaustion raises MemoryError instead of inviting the OOM killer."""
    soft, hard = resource.getrlimit(resource.RLIMIT_AS)
    with open("/proc/self/statm") as fh:
        used = int(fh.read().split()[0]) * resource.getpagesize()
    cap = used + extra_bytes
    if hard != resource.RLIM_INFINITY:
        cap = min(cap, hard)
    resource.setrlimit(resource.RLIMIT_AS, (cap, hard))
    try:
        yield
    finally:
        resource.setrlimit(resource.RLIMIT_AS, (soft, hard))


def test_7_periodicity():
    for text in ("f1", "1"):
        x = cell(A1, text)
        assert twist_power(x, 2) == x
    w0 = A2.longest_element()
    for i in (1, 2):
        x = cell(A2, f"f{i}")
        wt = x.weight
        shift = tuple(a + b for a, b in zip(wt, w0.act_root(wt)))
        lam = A2.root_to_weight(tuple(-c for c in shift))
        assert (A2.root_form(shift, wt), lam) == (3, (3, -3) if i == 1 else (-3, 3))
        # q^{(wt x + w0 wt x, wt x)} D_{w0, -wt x - w0 wt x} x
        target = (frozen(w0, lam) * x).scale(qpow(3)).canonical()
        assert twist_power(x, 6) == target == periodicity_target(x)
    rng = random.Random(SEED)
    degrees = [xi for xi in degrees_up_to(B2, 2) if any(xi)]
    samples = []
    for _ in range(10):
        xi = rng.choice(degrees)
        samples.append(CellElement.from_element(B2.longest_element(), random_homogeneous(B2, xi, rng)))
    try:
        with height_cap(60), address_space_headroom(3 << 30):
            for i in (1, 2):
                assert periodicity_check(cell(B2, f"f{i}"), 6)["identity"]
            for x in samples:
                assert x.is_homogeneous()
                assert twist_power(x, 6) == x, x
    finally:
        clear_caches()


def test_8_crystalized_kumar_peterson():
    lams = [(1, 0), (0, 1), (1, 1), (2, 2)]
    missing = {}
    for word in [(0,), (0, 1), (0, 1, 0)]:
        r = kumar_peterson_check(A2.element_from_word(word), lams, 4)
        if not r["equal"]:
            missing[word] = sorted(b.c for b in r["missing"])
    assert not missing, f"labels absent from the lambda range: {missing}"


def test_9_quantum_cluster_engine():
    rng = random.Random(SEED)
    for _ in range(100):
        pair = random_compatible_pair(rng)
        for k in range(pair.exchangeable):
            m = mutate_compatible_pair(pair, k)
            assert check_compatible(m)
            assert mutate_compatible_pair(m, k) == pair
    w0 = A2.longest_element()
    seed = initial_seed(w0, (0, 1, 0))
    assert check_compatible(seed.pair)
    assert all(d > 0 for d in compatibility_degrees(seed.pair))
    r = verify_exchange_in_algebra(seed, 0)
    assert r["dual_bar_invariant"] and r["dual_canonical"]
    for s in list(seed.frozen) + [0]:
        assert qgls_check(seed, tuple(int(t == s) for t in range(seed.size)))["passes"], s


def test_10_commutativity_at_q_equal_one():
    rng = random.Random(SEED)
    for _ in range(20):
        x, y = sample_cell_elements(A2, 2, rng)
        assert all(c == 0 for c in specialize_coefficients((x * y - y * x).canonical()))
