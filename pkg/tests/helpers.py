"""Shared constructors and oracles for the test suite."""

import numpy as np

import gpcuntz as g


def random_unit(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


def random_cycle(rng, n, k):
    return g.cycle([random_unit(rng, n) for _ in range(k)])


def random_nonperiodic_cycle(rng, n, k):
    while True:
        z = random_cycle(rng, n, k)
        if g.primitive_root(z)[1] == 1:
            return z


def random_explicit_chain(rng, n, pre_len, period_len):
    return g.explicit_chain(
        [random_unit(rng, n) for _ in range(period_len)],
        [random_unit(rng, n) for _ in range(pre_len)],
    )


def random_element(rng, n, max_word=2, n_terms=3):
    terms = {}
    for _ in range(n_terms):
        lj = int(rng.integers(0, max_word + 1))
        lk = int(rng.integers(0, max_word + 1))
        j = tuple(int(x) for x in rng.integers(1, n + 1, size=lj))
        k = tuple(int(x) for x in rng.integers(1, n + 1, size=lk))
        coeff = complex(rng.normal(), rng.normal())
        terms[(j, k)] = terms.get((j, k), 0.0) + coeff
    return g.AlgebraElement.from_terms(n, terms)


def random_unitary(rng, n):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def assert_elements_close(a, b, tol=1e-9):
    diff = (a - b).sup_norm()
    assert diff <= tol, f"elements differ by {diff}"


def divisors(k):
    return [d for d in range(1, k + 1) if k % d == 0]


def brute_force_power(z, tol=1e-9):
    """Independent tensor-power oracle on full tensors.

    Returns (d, p): the smallest block length d dividing k such that the
    flattened tensor of z is a unimodular multiple of the p-fold Kronecker
    power of its first d factors, with p = k // d.
    """
    t = g.full_tensor(z)
    k = z.k
    for d in divisors(k):
        p = k // d
        head = g.full_tensor(g.CycleParam(z.factors[:d]))
        cand = head
        for _ in range(p - 1):
            cand = np.kron(cand, head)
        if abs(abs(np.vdot(cand, t)) - 1.0) < tol:
            return d, p
    return k, 1
