"""
Parsing shortcuts and brute-force oracles shared by the tests
"""

import itertools

from fitting_forge.models.ideal import parse_ideal
from fitting_forge.models.poly import normalize, parse_poly
from fitting_forge.services.ideal_service import as_monomial_ideal


def poly(text, vars):
    return parse_poly(text, vars)


def mono_ideal(text, vars):
    return as_monomial_ideal(parse_ideal(text, vars))


def brute_det(rows, one):
    """Leibniz formula; only for the tiny matrices in the tests."""
    n = len(rows)
    total = one - one
    if n == 0:
        return one
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -one if inversions % 2 else one
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def brute_minors(A, size):
    q, p = A.shape
    minors = []
    for rows in itertools.combinations(range(q), size):
        for cols in itertools.combinations(range(p), size):
            minors.append(brute_det([[A.entry(i, j) for j in cols] for i in rows], A.vars.one))
    return minors


def brute_gcd(values, zero):
    g = zero
    for v in values:
        if v:
            g = v if not g else g.gcd(v)
    return normalize(g) if g else g
