"""Randomized and exhaustive verification of the algebra's identities.

Used by ``semisym check`` and by the tutorials; each check returns a dict
with an ``ok`` flag and a short description of any failure.
"""

from __future__ import annotations

import random

from .algebra import SemiSymmetricAlgebra
from .coalgebra import coassociativity_check, compositions, counit_law_check, duality_check
from .duality import pair_decomposable, pair_laplace
from .index import enum_J_composition
from .inner import (
    left_inner,
    left_inner_basis,
    left_inner_oracle,
    module_law_checks,
    right_inner,
    right_inner_basis,
    right_inner_oracle,
)
from .schur import ExactMatrix, lagrange_check, schur_direct, schur_laplace


def random_matrix(ring, rows, cols, rng: random.Random, lo=-9, hi=9) -> ExactMatrix:
    return ExactMatrix.from_rows(ring, [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_vectors(ring, count, n, rng: random.Random, lo=-5, hi=5):
    return [[ring(rng.randint(lo, hi)) for _ in range(n)] for _ in range(count)]


def random_element(alg: SemiSymmetricAlgebra, d: int, rng: random.Random, terms=3):
    basis = alg.basis(d)
    picks = rng.sample(basis, min(terms, len(basis)))
    return alg.element({j: rng.randint(-4, 4) or 1 for j in picks})


def _result(failures):
    return {"ok": not failures, "failures": failures[:5], "failure_count": len(failures)}


def check_associativity(alg, rng, samples):
    top = alg.seq.max_degree
    failures = []
    for _ in range(samples):
        p = rng.randint(0, top)
        q = rng.randint(0, top - p)
        r = rng.randint(0, top - p - q)
        a, b, c = (random_element(alg, d, rng) for d in (p, q, r))
        if alg.multiply(alg.multiply(a, b), c) != alg.multiply(a, alg.multiply(b, c)):
            failures.append(f"degrees {(p, q, r)}")
    return _result(failures)


def check_coalgebra(alg):
    failures = []
    for d in range(alg.seq.max_degree + 1):
        for j in alg.basis(d):
            x = alg.basis_vector(j)
            if not coassociativity_check(x, 3):
                failures.append(f"coassociativity at {list(j)}")
            if not counit_law_check(x):
                failures.append(f"counit at {list(j)}")
    return _result(failures)


def check_lagrange(alg, rng, samples):
    failures = []
    for d in range(1, alg.seq.max_degree + 1):
        chi = alg.character(d)
        for _ in range(samples):
            A = random_matrix(alg.ring, alg.n, d, rng)
            lhs, rhs, ok = lagrange_check(A, chi)
            if not ok:
                failures.append(f"d={d}: {lhs} != {rhs}")
    return _result(failures)


def check_laplace(alg, rng, samples):
    seq = alg.seq
    failures = []
    for n in range(2, seq.max_degree + 1):
        chi = seq.character(n)
        for _ in range(samples):
            A = random_matrix(alg.ring, n, n, rng)
            direct = schur_direct(A, chi)
            for comp in compositions(n, 2):
                for blocks in enum_J_composition(seq, n, comp):
                    if schur_laplace(A, seq, comp, blocks) != direct:
                        failures.append(f"n={n} blocks {blocks}")
    return _result(failures)


def check_pairing_laplace(alg, rng, samples):
    seq = alg.seq
    failures = []
    for n in range(1, seq.max_degree + 1):
        chi = seq.character(n)
        for _ in range(samples):
            xs = random_vectors(alg.ring, n, alg.n, rng)
            ys = random_vectors(alg.ring, n, alg.n, rng)
            direct = pair_decomposable(xs, ys, chi)
            for k in (2, 3):
                for comp in compositions(n, k):
                    first, second = pair_laplace(seq, xs, ys, comp)
                    if not first == second == direct:
                        failures.append(f"n={n} composition {comp}")
                    if not duality_check(alg, xs, ys, comp)["ok"]:
                        failures.append(f"coproduct duality n={n} composition {comp}")
    return _result(failures)


def check_inner(alg, max_degree=None):
    forms = alg.dual()
    top = alg.seq.max_degree if max_degree is None else max_degree
    failures = []
    for q in range(top + 1):
        for n in range(top + 1):
            for j in alg.basis(q):
                for k in alg.basis(n):
                    a, f = alg.basis_vector(j), forms.basis_vector(k)
                    left = left_inner(a, f)
                    if not left == left_inner_basis(alg, j, k) == left_inner_oracle(a, f):
                        failures.append(f"left {list(j)} -| {list(k)}")
                    b, g = alg.basis_vector(k), forms.basis_vector(j)
                    right = right_inner(b, g)
                    if not right == right_inner_basis(alg, k, j) == right_inner_oracle(b, g):
                        failures.append(f"right {list(k)} |- {list(j)}")
    return _result(failures)


def check_module_laws(alg, rng, samples):
    forms = alg.dual()
    top = alg.seq.max_degree
    triples = []
    for _ in range(samples):
        p = rng.randint(0, top)
        q = rng.randint(0, top - p)
        a = random_element(alg, p, rng)
        b = random_element(alg, q, rng)
        r = rng.randint(0, top)
        f = random_element(forms, r, rng)
        g = random_element(forms, rng.randint(0, top - r), rng)
        triples.append((a, b, f, g))
    report = module_law_checks(alg, triples)
    failures = [f"{law} sample {i}" for law, idx in report.items() for i in idx]
    return _result(failures)


def run_suite(seq, n: int, rng: random.Random, samples: int = 10) -> dict:
    report = {}
    validation = seq.validation
    report["validation"] = {"ok": validation.ok, "failures": list(validation.failures)}
    if not validation.ok:
        report["ok"] = False
        return report
    alg = SemiSymmetricAlgebra(seq, n)
    report["associativity"] = check_associativity(alg, rng, samples)
    report["coalgebra"] = check_coalgebra(alg)
    report["lagrange"] = check_lagrange(alg, rng, samples)
    report["laplace"] = check_laplace(alg, rng, max(1, samples // 5))
    report["pairing_laplace"] = check_pairing_laplace(alg, rng, max(1, samples // 5))
    report["inner_products"] = check_inner(alg)
    report["module_laws"] = check_module_laws(alg, rng, samples)
    report["ok"] = all(v["ok"] for v in report.values() if isinstance(v, dict))
    return report
