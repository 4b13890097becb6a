"""Encoding maps as vector tuples and decoding them back."""

import pytest
from hypothesis import given, settings, strategies as st

import helpers
from semicount.bijection import (
    enumerate_vector_tuples,
    induced_flag,
    map_to_tuple,
    roundtrip_check,
    tuple_code,
    tuple_from_code,
    tuple_has_profile,
    tuple_profile,
    tuple_to_map,
)
from semicount.counting import profiles, staged_count
from semicount.flags import image_flag
from semicount.gf import make_field
from semicount.linalg import matrix_from_rows, standard_basis
from semicount.semilinear import SemilinearMap, enumerate_maps, identity_map, profile

GF2 = make_field(2, 1)
GF3 = make_field(3, 1)
GF4 = make_field(2, 2)

E1_ZERO = ((1, 0), (0, 0))  # spans a line, last entry zero


# --- membership ---------------------------------------------------------------

def test_membership_examples():
    assert tuple_has_profile(GF2, standard_basis(2), 2, 2)
    assert tuple_has_profile(GF2, E1_ZERO, 1, 0)
    assert not tuple_has_profile(GF2, E1_ZERO, 1, 1)
    assert not tuple_has_profile(GF2, E1_ZERO, 2, 2)


def test_membership_argument_errors():
    with pytest.raises(ValueError):
        tuple_has_profile(GF2, E1_ZERO, 2, 3)          # s > r
    with pytest.raises(ValueError):
        tuple_has_profile(GF2, E1_ZERO, 3, 0)          # r > g
    with pytest.raises(ValueError):
        tuple_has_profile(GF2, ((1, 0), (0,)), 1, 0)   # ragged entry
    with pytest.raises(ValueError):
        tuple_has_profile(GF2, ((2, 0), (0, 0)), 1, 0)  # coordinate out of range


def test_classes_partition_all_tuples():
    # every tuple satisfies the conditions for exactly one profile
    for ctx, g in [(GF2, 2), (GF3, 2), (GF2, 3)]:
        for xs in enumerate_vector_tuples(ctx, g):
            hits = [(r, s) for r, s in profiles(g) if tuple_has_profile(ctx, xs, r, s)]
            assert hits == [tuple_profile(ctx, xs)]


def test_class_sizes_match_staged_product():
    for ctx, g in [(GF2, 2), (GF3, 2), (GF2, 3)]:
        sizes = {prof: 0 for prof in profiles(g)}
        for xs in enumerate_vector_tuples(ctx, g):
            sizes[tuple_profile(ctx, xs)] += 1
        for r, s in profiles(g):
            assert sizes[(r, s)] == staged_count(g, r, s, ctx.q)


# --- induced flags ---------------------------------------------------------------

def test_induced_flag_examples():
    assert induced_flag(GF2, standard_basis(2)).dims == (2,)
    fl = induced_flag(GF2, E1_ZERO)
    assert fl.dims == (2, 1, 0)
    assert fl.subspaces[1] == ((1, 0),)


def test_induced_flag_starts_at_span_dim():
    from semicount.linalg import span_dim
    for xs in enumerate_vector_tuples(GF3, 2):
        dims = induced_flag(GF3, xs).dims
        r = span_dim(GF3, list(xs))
        assert dims[0] == 2
        if r < 2:
            assert dims[1] == r


# --- encode ----------------------------------------------------------------------

def test_encode_examples():
    assert map_to_tuple(identity_map(GF2, 2)) == standard_basis(2)
    assert map_to_tuple(identity_map(GF3, 3)) == standard_basis(3)
    nilp = SemilinearMap(matrix_from_rows(GF2, [(0, 1), (0, 0)]), 0)
    assert map_to_tuple(nilp) == E1_ZERO
    twisted = SemilinearMap(matrix_from_rows(GF4, [(2,)]), 1)
    assert map_to_tuple(twisted) == ((2,),)


def test_encode_lands_in_own_profile_class():
    for ctx, g, tau in [(GF2, 2, 0), (GF3, 2, 0), (GF4, 2, 1)]:
        for F in enumerate_maps(ctx, g, tau):
            r, s = profile(F)
            assert tuple_has_profile(ctx, map_to_tuple(F), r, s)


# --- decode ----------------------------------------------------------------------

def test_decode_examples():
    assert tuple_to_map(GF2, standard_basis(2), 0) == identity_map(GF2, 2)
    nilp = tuple_to_map(GF2, E1_ZERO, 0)
    assert nilp.mat == matrix_from_rows(GF2, [(0, 1), (0, 0)]) and nilp.tau == 0
    twisted = tuple_to_map(GF4, ((2,),), 1)
    assert twisted.mat == matrix_from_rows(GF4, [(2,)]) and twisted.tau == 1


def test_decode_preserves_profile_and_image_flag():
    for ctx, tau in [(GF2, 0), (GF3, 0), (GF4, 0), (GF4, 1)]:
        for xs in enumerate_vector_tuples(ctx, 2):
            F = tuple_to_map(ctx, xs, tau)
            assert profile(F) == tuple_profile(ctx, xs)
            # the decoded map's image chain is the flag read off the tuple
            assert image_flag(F) == induced_flag(ctx, xs)


def test_decode_profile_independent_of_twist():
    for xs in enumerate_vector_tuples(GF4, 2):
        assert profile(tuple_to_map(GF4, xs, 0)) == profile(tuple_to_map(GF4, xs, 1))


# --- round trips -----------------------------------------------------------------

def test_roundtrip_map_side_exhaustive():
    for ctx, g, tau in [(GF2, 2, 0), (GF3, 2, 0), (GF4, 2, 1)]:
        for F in enumerate_maps(ctx, g, tau):
            assert tuple_to_map(ctx, map_to_tuple(F), tau) == F


def test_roundtrip_tuple_side_exhaustive():
    for ctx, g, tau in [(GF2, 2, 0), (GF2, 2, 0), (GF4, 2, 1)]:
        for xs in enumerate_vector_tuples(ctx, g):
            assert map_to_tuple(tuple_to_map(ctx, xs, tau)) == xs


# --- tuple codes ---------------------------------------------------------------

def test_tuple_code_layout():
    # little-endian base-q digits, entry j owns digits j*g .. j*g+g-1
    assert tuple_from_code(GF3, 2, 5) == ((2, 1), (0, 0))
    assert tuple_from_code(GF3, 2, 5 + 27) == ((2, 1), (0, 1))
    assert tuple_code(GF3, ((2, 1), (0, 0))) == 5


def test_tuple_code_roundtrip_and_range():
    for code in range(3 ** 4):
        assert tuple_code(GF3, tuple_from_code(GF3, 2, code)) == code
    with pytest.raises(ValueError):
        tuple_from_code(GF3, 2, 3 ** 4)
    with pytest.raises(ValueError):
        tuple_from_code(GF3, 2, -1)


# --- batch harness -------------------------------------------------------------

def test_roundtrip_check_exhaustive_report():
    report, ok = roundtrip_check(GF2, 2, 0)
    assert ok
    assert report["mode"] == "exhaustive" and report["seed"] is None
    assert report["maps_checked"] == 16 and report["failures"] == 0
    by_profile = {(row["r"], row["s"]): row["checked"] for row in report["per_profile"]}
    # rows cover every profile, zeros included
    assert by_profile == {(0, 0): 1, (1, 0): 3, (1, 1): 6,
                          (2, 0): 0, (2, 1): 0, (2, 2): 6}


def test_roundtrip_check_gf4_profile_tallies():
    report, ok = roundtrip_check(GF4, 2, 1)
    assert ok
    by_profile = {(row["r"], row["s"]): row["checked"] for row in report["per_profile"]}
    assert by_profile == {(0, 0): 1, (1, 0): 15, (1, 1): 60,
                          (2, 0): 0, (2, 1): 0, (2, 2): 180}


def test_roundtrip_check_sampled_mode_is_seeded():
    report, ok = roundtrip_check(GF3, 2, 0, budget=10, samples=40, seed=7)
    assert ok
    assert report["mode"] == "sampled" and report["seed"] == 7
    assert report["maps_checked"] == 40
    again, _ = roundtrip_check(GF3, 2, 0, budget=10, samples=40, seed=7)
    assert again == report
    other, _ = roundtrip_check(GF3, 2, 0, budget=10, samples=40, seed=8)
    assert other != report


def test_roundtrip_check_worker_split_is_invisible(monkeypatch):
    import semicount.bijection as bij
    monkeypatch.setattr(bij, "_CHUNK_CODES", 16)
    single, ok1 = roundtrip_check(GF3, 2, 0, threads=1)
    pooled, ok2 = roundtrip_check(GF3, 2, 0, threads=2)
    assert ok1 and ok2 and single == pooled


# --- randomized cross-checks ------------------------------------------------------

@st.composite
def tuple_case(draw):
    p, d = draw(st.sampled_from([(2, 1), (3, 1), (2, 2)]))
    ctx = make_field(p, d)
    g = draw(st.integers(1, 3))
    tau = draw(st.integers(0, ctx.d - 1))
    code = draw(st.integers(0, ctx.q ** (g * g) - 1))
    return ctx, g, tau, code


@settings(max_examples=150, deadline=None)
@given(tuple_case())
def test_property_both_directions_roundtrip(case):
    ctx, g, tau, code = case
    xs = tuple_from_code(ctx, g, code)
    F = tuple_to_map(ctx, xs, tau)
    assert map_to_tuple(F) == xs
    from semicount.semilinear import matrix_from_code
    G = SemilinearMap(matrix_from_code(ctx, g, code), tau)
    assert tuple_to_map(ctx, map_to_tuple(G), tau) == G


@settings(max_examples=100, deadline=None)
@given(tuple_case())
def test_property_profile_agrees_with_set_oracle(case):
    ctx, g, tau, code = case
    xs = tuple_from_code(ctx, g, code)
    F = tuple_to_map(ctx, xs, tau)
    rows = [F.mat.row(i) for i in range(g)]
    r, s = helpers.naive_profile(ctx.p, ctx.modulus, rows, tau, g)
    assert tuple_profile(ctx, xs) == (r, s)
