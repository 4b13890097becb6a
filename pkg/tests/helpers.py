"""Brute-force oracles for the test suite.

Everything here is reimplemented from first principles on plain tuples:
field elements are little-endian digit tuples reduced by explicit long
division, subspaces are extensional frozensets of vectors, dimensions are
logarithms of set sizes.  Nothing imports from the package, so agreement
between these oracles and the library is a real check, not a tautology.
"""

from __future__ import annotations

from itertools import product


# --- field arithmetic on integer codes ------------------------------------

def to_digits(code: int, p: int, d: int) -> tuple[int, ...]:
    out = []
    for _ in range(d):
        code, r = divmod(code, p)
        out.append(r)
    return tuple(out)


def from_digits(digs, p: int) -> int:
    code = 0
    for c in reversed(list(digs)):
        code = code * p + c
    return code


def _poly_mod(p: int, mod: tuple[int, ...], a: list[int]) -> list[int]:
    # mod is monic of degree d; reduce a in place by long division
    d = len(mod) - 1
    a = list(a)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for k in range(d + 1):
                a[i - d + k] = (a[i - d + k] - c * mod[k]) % p
    return [x % p for x in a[:d]] + [0] * max(0, d - len(a))


def f_add(p: int, d: int, a: int, b: int) -> int:
    da, db = to_digits(a, p, d), to_digits(b, p, d)
    return from_digits(((x + y) % p for x, y in zip(da, db)), p)


def f_neg(p: int, d: int, a: int) -> int:
    return from_digits(((-x) % p for x in to_digits(a, p, d)), p)


def f_mul(p: int, modulus: tuple[int, ...], a: int, b: int) -> int:
    d = len(modulus) - 1
    da, db = to_digits(a, p, d), to_digits(b, p, d)
    conv = [0] * (2 * d - 1 if d else 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                conv[i + j] = (conv[i + j] + x * y) % p
    return from_digits(_poly_mod(p, modulus, conv), p)


def f_pow(p: int, modulus: tuple[int, ...], a: int, n: int) -> int:
    out = 1
    for _ in range(n):
        out = f_mul(p, modulus, out, a)
    return out


def f_frob(p: int, modulus: tuple[int, ...], a: int, i: int) -> int:
    return f_pow(p, modulus, a, p ** i)


def f_inv(p: int, modulus: tuple[int, ...], a: int) -> int:
    if a == 0:
        raise ZeroDivisionError
    q = p ** (len(modulus) - 1)
    return f_pow(p, modulus, a, q - 2)


# --- extensional subspaces -------------------------------------------------

def vec_add(p: int, d: int, u, v):
    return tuple(f_add(p, d, x, y) for x, y in zip(u, v))


def vec_scale(p: int, modulus: tuple[int, ...], c: int, v):
    return tuple(f_mul(p, modulus, c, x) for x in v)


def span_set(p: int, modulus: tuple[int, ...], gens, g: int) -> frozenset:
    """Every linear combination of the generators, as a frozenset."""
    d = len(modulus) - 1
    q = p ** d
    zero = (0,) * g
    out = set()
    for coeffs in product(range(q), repeat=len(gens)):
        acc = zero
        for c, w in zip(coeffs, gens):
            if c:
                acc = vec_add(p, d, acc, vec_scale(p, modulus, c, w))
        out.add(acc)
    return frozenset(out)


def set_dim(S: frozenset, q: int) -> int:
    k = 0
    while q ** k < len(S):
        k += 1
    assert q ** k == len(S), "not a subspace-sized set"
    return k


def standard_vectors(g: int):
    return [tuple(1 if i == j else 0 for j in range(g)) for i in range(g)]


def all_subspaces(p: int, modulus: tuple[int, ...], g: int) -> list[tuple[frozenset, tuple]]:
    """Every subspace of the g-dimensional space, with one generating set.

    Walks the lattice upward: extend each known subspace by each outside
    vector.  Returns (extension set, generators) pairs.
    """
    d = len(modulus) - 1
    q = p ** d
    space = [to_vec(i, q, g) for i in range(q ** g)]
    zero_sub = span_set(p, modulus, [], g)
    found = {zero_sub: ()}
    frontier = [(zero_sub, ())]
    while frontier:
        nxt = []
        for sub, gens in frontier:
            for v in space:
                if v in sub:
                    continue
                new_gens = gens + (v,)
                new_sub = span_set(p, modulus, new_gens, g)
                if new_sub not in found:
                    found[new_sub] = new_gens
                    nxt.append((new_sub, new_gens))
        frontier = nxt
    return list(found.items())


def to_vec(code: int, q: int, g: int) -> tuple[int, ...]:
    out = []
    for _ in range(g):
        code, r = divmod(code, q)
        out.append(r)
    return tuple(out)


# --- semilinear maps as functions ------------------------------------------

def apply_map(p, modulus, rows, tau_i: int, v):
    """rows is the matrix as a row list; computes A . frob(v)."""
    d = len(modulus) - 1
    w = [f_frob(p, modulus, x, tau_i) for x in v]
    out = []
    for row in rows:
        acc = 0
        for a, x in zip(row, w):
            acc = f_add(p, d, acc, f_mul(p, modulus, a, x))
        out.append(acc)
    return tuple(out)


def image_set(p, modulus, rows, tau_i: int, S) -> frozenset:
    # the image of a subspace under a semilinear map is again a subspace,
    # so no span closure is needed
    return frozenset(apply_map(p, modulus, rows, tau_i, v) for v in S)


def naive_profile(p, modulus, rows, tau_i: int, g: int) -> tuple[int, int]:
    """(rank, stable rank) by iterating literal set images of the space."""
    q = p ** (len(modulus) - 1)
    S = span_set(p, modulus, standard_vectors(g), g)
    first = image_set(p, modulus, rows, tau_i, S)
    r = set_dim(first, q)
    for _ in range(g):
        S = image_set(p, modulus, rows, tau_i, S)
    return r, set_dim(S, q)


# --- the inductive normal-form construction --------------------------------

def coeffs_in_basis(p, modulus, basis, u, g):
    """Coordinates of u in the given basis, found by scanning all q^g
    coefficient tuples.  Slow and certain."""
    d = len(modulus) - 1
    q = p ** d
    zero = (0,) * g
    for coeffs in product(range(q), repeat=len(basis)):
        acc = zero
        for c, w in zip(coeffs, basis):
            if c:
                acc = vec_add(p, d, acc, vec_scale(p, modulus, c, w))
        if acc == u:
            return coeffs
    raise AssertionError("u not in the span of basis")


def direct_adapt(p, modulus, e_basis, U_set: frozenset, g: int):
    """Adapt e_basis to the subspace U by the inductive recipe, scanning U
    itself for each normal-form vector.

    Returns (adapted basis list, pivot list, per-pivot match counts).  The
    match count should be exactly 1 everywhere; callers assert it to pin
    down uniqueness independently of any elimination code.
    """
    chain = []
    for j in range(g + 1):
        tail = span_set(p, modulus, e_basis[j:], g)
        chain.append(U_set & tail)
    J = [j for j in range(g) if chain[j + 1] != chain[j]]
    chosen = {}
    match_counts = {}
    for j in J:
        hits = []
        for u in sorted(U_set):
            c = coeffs_in_basis(p, modulus, e_basis, u, g)
            if (c[j] == 1
                    and all(c[i] == 0 for i in range(j))
                    and all(c[i] == 0 for i in J if i > j)):
                hits.append(u)
        match_counts[j] = len(hits)
        chosen[j] = hits[0] if hits else None
    adapted = [e_basis[j] for j in range(g) if j not in J]
    adapted += [chosen[j] for j in sorted(J)]
    return adapted, J, match_counts
