"""Spread contexts and the two orbital ODFC constructions."""

import random

from flagcodes import (CyclicMatrixGroup, Matrix, Subspace, admissible_flag_dims,
                       admissible_subgroup_orders, build_full_type_context,
                       build_spread_context, canonical_admissible_flag,
                       conjugate_spread, flag_distance_bound,
                       full_type_generator_flag, full_type_max_odfc,
                       full_type_orbit_odfc, is_odfc_by_characterization,
                       is_odfc_by_definition, is_partial_spread, is_spread,
                       make_field, orbit_subspace, projected_code,
                       spread_type_max_odfc, spread_type_orbit_odfc,
                       subgroup_of_order, table_row)
from flagcodes.constructions import _max_code_with_hook
from flagcodes.errors import (AmbientMismatchError, BadDimensionsError,
                              GcdConditionFailedError, NotADivisorError,
                              NotExtendingError, RankDeficientError,
                              SingularMatrixError, TypeMismatchError)

TABLE1 = [(1, 1, 28), (2, 1, 28), (4, 2, 14), (7, 7, 4),
          (8, 4, 7), (14, 7, 4), (28, 14, 2), (56, 28, 1)]


def test_spread_context_q2k2s2(ctx_q2k2s2):
    ctx = ctx_q2k2s2
    assert ctx.n == 4
    assert len(ctx.spread) == 5
    assert is_spread(ctx.spread)
    assert ctx.member_stabilizer_order == 3
    assert len(ctx.hyperplanes) == 5
    assert ctx.group.order == 15
    orbit, stab = orbit_subspace(ctx.group, ctx.spread.anchors[0])
    assert orbit == ctx.spread and stab == 3


def test_spread_context_q2k3s2(ctx_q2k3s2):
    ctx = ctx_q2k3s2
    assert len(ctx.spread) == 9
    assert is_spread(ctx.spread)
    assert ctx.member_stabilizer_order == 7
    assert ctx.hyperplanes.min_distance() == 6


def test_spread_context_rejects_bad_shapes(F2):
    try:
        build_spread_context(F2, 2, 1)
    except BadDimensionsError:
        pass
    else:
        raise AssertionError("s = 1 has no proper lines to reduce")
    try:
        build_spread_context(F2, 0, 2)
    except BadDimensionsError:
        pass


def test_conjugate_spread(ctx_q2k2s2, F2):
    ctx = ctx_q2k2s2
    same, group = conjugate_spread(ctx, Matrix.identity(F2, 4))
    assert same == ctx.spread
    assert group.generator == ctx.group.generator

    rng = random.Random(642)
    for _ in range(5):
        while True:
            B = Matrix(F2, [[rng.randrange(2) for _ in range(4)]
                            for _ in range(4)], 4)
            if B.is_invertible():
                break
        moved, conj = conjugate_spread(ctx, B)
        assert len(moved) == 5 and is_spread(moved)
        orbit, stab = orbit_subspace(conj, ctx.spread.anchors[0].apply(B))
        assert orbit == moved and stab == 3

    try:
        conjugate_spread(ctx, Matrix.identity(F2, 3))
    except AmbientMismatchError:
        pass
    else:
        raise AssertionError("3x3 conjugator on a 4-dim context")
    try:
        conjugate_spread(ctx, Matrix.zero(F2, 4, 4))
    except SingularMatrixError:
        pass


def test_admissible_dims_and_canonical_flag(ctx_q2k2s2, ctx_q3k3s2, ctx_q4k3s3):
    assert admissible_flag_dims(ctx_q2k2s2) == (1, 2, 3)
    assert admissible_flag_dims(ctx_q3k3s2) == (1, 2, 3, 4, 5)
    assert admissible_flag_dims(ctx_q4k3s3) == (1, 2, 3, 6, 7, 8)
    for ctx in [ctx_q2k2s2, ctx_q3k3s2]:
        flag = canonical_admissible_flag(ctx)
        assert flag.dims == admissible_flag_dims(ctx)
        assert flag.subspaces[ctx.k - 1] in ctx.spread
        assert flag.subspaces[list(flag.dims).index(ctx.n - ctx.k)] in ctx.hyperplanes


def test_spread_type_orbit_q2(ctx_q2k2s2):
    assert admissible_subgroup_orders(ctx_q2k2s2) == [1, 5]
    code = spread_type_orbit_odfc(ctx_q2k2s2, 5)
    assert len(code) == 5
    assert code.min_distance() == 8 == flag_distance_bound(4, (1, 2, 3))
    assert is_odfc_by_definition(code)
    assert is_odfc_by_characterization(code)
    single = spread_type_orbit_odfc(ctx_q2k2s2, 1)
    assert len(single) == 1 and not is_odfc_by_definition(single)


def test_spread_type_gate(ctx_q3k3s2, ctx_q2k2s2):
    # q=3, k=3: q^k - 1 = 26, q - 1 = 2
    try:
        spread_type_orbit_odfc(ctx_q3k3s2, 13)
    except GcdConditionFailedError as e:
        assert "gcd" in str(e) and "13" in str(e)
    else:
        raise AssertionError("gcd(13, 26) = 13 but gcd(13, 2) = 1")
    try:
        spread_type_orbit_odfc(ctx_q3k3s2, 26)
    except GcdConditionFailedError:
        pass
    else:
        raise AssertionError("gcd(26, 26) = 26 but gcd(26, 2) = 2")
    try:
        spread_type_orbit_odfc(ctx_q3k3s2, 5)
    except NotADivisorError:
        pass
    else:
        raise AssertionError("5 does not divide 728")
    try:
        table_row(ctx_q3k3s2, 0)
    except NotADivisorError:
        pass
    try:
        spread_type_orbit_odfc(ctx_q2k2s2, 3)
    except GcdConditionFailedError:
        pass
    else:
        raise AssertionError("gcd(3, 3) = 3 but gcd(3, 1) = 1")


def test_spread_type_singleton_rows(ctx_q3k3s2):
    # gcd(t, q - 1) = t gives a singleton orbit: legal input, never optimum
    code = spread_type_orbit_odfc(ctx_q3k3s2, 2)
    assert len(code) == 1
    assert not is_odfc_by_definition(code)
    assert table_row(ctx_q3k3s2, 2) == (2, 1, 28, False)


def test_table1_rows_frozen(ctx_q3k3s2):
    ctx = ctx_q3k3s2
    assert admissible_subgroup_orders(ctx) == [t for t, _, _ in TABLE1]
    for t, size, m in TABLE1:
        row = table_row(ctx, t)
        assert (row.t, row.orbit_size, row.num_orbits) == (t, size, m)
        code = spread_type_orbit_odfc(ctx, t)
        assert len(code) == size
        assert row.is_odfc == is_odfc_by_definition(code)
        assert row.is_odfc == (size > 1)


def test_spread_type_max_q3(ctx_q3k3s2):
    code = spread_type_max_odfc(ctx_q3k3s2, 28)
    assert len(code) == 28
    assert code.min_distance() == 18
    assert is_odfc_by_definition(code)
    proj = projected_code(code, 3)
    assert set(proj.members) == set(ctx_q3k3s2.spread.members)


def test_spread_type_max_q2(ctx_q2k3s2):
    ctx = ctx_q2k3s2
    assert admissible_subgroup_orders(ctx) == [1, 3, 9]
    code = spread_type_max_odfc(ctx, 3)
    assert len(code) == 9
    assert code.min_distance() == 18 == flag_distance_bound(6, code.dims)
    assert is_odfc_by_definition(code)
    assert set(projected_code(code, 3).members) == set(ctx.spread.members)
    # s = 2 collapses the two sides: lines of GF(q^k)^2 are its hyperplanes
    assert set(ctx.hyperplanes.members) == set(ctx.spread.members)


def test_spread_type_orbit_levels_stay_in_context_codes(ctx_q4k3s3):
    ctx = ctx_q4k3s3
    code = spread_type_orbit_odfc(ctx, 57)
    assert len(code) == 19
    proj_k = projected_code(code, 3)
    proj_h = projected_code(code, 4)
    assert set(proj_k.members) <= set(ctx.spread.members)
    assert set(proj_h.members) <= set(ctx.hyperplanes.members)


def test_full_type_context(ftx_q2k2, F2):
    assert ftx_q2k2.n == 5
    assert ftx_q2k2.group.order == 7
    try:
        build_full_type_context(F2, 1)
    except BadDimensionsError:
        pass
    else:
        raise AssertionError("k = 1 is the spread type with s = 3")


def test_full_type_generator_flag_frozen(ftx_q2k2):
    flag = full_type_generator_flag(ftx_q2k2)
    assert flag.dims == (1, 2, 3, 4)
    assert [s.basis.rows for s in flag.subspaces] == [
        ((1, 0, 0, 1, 0),),
        ((1, 0, 0, 1, 0), (0, 1, 0, 0, 1)),
        ((1, 0, 0, 1, 0), (0, 1, 0, 0, 1), (0, 0, 1, 0, 0)),
        ((1, 0, 0, 0, 0), (0, 1, 0, 0, 1), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0))]


def test_full_type_orbit_and_max(ftx_q2k2, ftx_q3k2):
    orbit = full_type_orbit_odfc(ftx_q2k2, full_type_generator_flag(ftx_q2k2))
    assert len(orbit) == 7
    assert orbit.min_distance() == 12 == flag_distance_bound(5, orbit.dims)
    assert is_odfc_by_definition(orbit)

    mx = full_type_max_odfc(ftx_q2k2)
    assert len(mx) == 9
    assert mx.min_distance() == 12
    assert is_odfc_by_definition(mx)
    assert is_odfc_by_characterization(mx)
    for idx in (2, 3):
        proj = projected_code(mx, idx)
        assert len(proj) == 9 and proj.min_distance() == 4
    assert is_partial_spread(projected_code(mx, 2))

    o3 = full_type_orbit_odfc(ftx_q3k2, full_type_generator_flag(ftx_q3k2))
    m3 = full_type_max_odfc(ftx_q3k2)
    assert (len(o3), o3.min_distance()) == (26, 12)
    assert (len(m3), m3.min_distance()) == (28, 12)
    assert is_odfc_by_definition(o3) and is_odfc_by_definition(m3)


def test_full_type_input_gates(ftx_q2k2, F2):
    try:
        full_type_generator_flag(ftx_q2k2, U1=[[1, 0], [1, 0]])
    except RankDeficientError:
        pass
    else:
        raise AssertionError("rank-1 U1 accepted")
    try:
        full_type_generator_flag(ftx_q2k2, U2=[[0, 0, 0], [0, 0, 0]])
    except RankDeficientError:
        pass
    # default v1 = 0, v2 = e1: forcing (v1 | v2) into rowsp(U1 | U2)
    try:
        full_type_generator_flag(ftx_q2k2, v1=[[1, 0]], v2=[[0, 1, 0]])
    except NotExtendingError:
        pass
    else:
        raise AssertionError("(v1 | v2) equal to row 1 of (U1 | U2)")
    try:
        full_type_max_odfc(ftx_q2k2, v2=[[0, 1, 0]])
    except NotExtendingError:
        pass
    else:
        raise AssertionError("v2 inside rowsp(U2) makes V2 singular")
    try:
        full_type_generator_flag(ftx_q2k2, U1=[[1, 0, 0], [0, 1, 0]])
    except BadDimensionsError:
        pass

    flag = full_type_generator_flag(ftx_q2k2)
    partial = [s for s in flag.subspaces if s.dim != 2]
    from flagcodes import make_flag
    try:
        full_type_orbit_odfc(ftx_q2k2, make_flag(partial))
    except TypeMismatchError:
        pass
    else:
        raise AssertionError("non-full flag in the full-type construction")


def test_full_type_degenerate_but_valid_flag(ftx_q2k2):
    # v2 inside rowsp(U2) is legal for the plain orbit when v1 keeps the
    # chain growing; the orbit then misses the bound at the (k+1) level
    deg = full_type_generator_flag(ftx_q2k2, v1=[[0, 1]], v2=[[0, 1, 0]])
    orbit = full_type_orbit_odfc(ftx_q2k2, deg)
    assert len(orbit) == 7
    assert orbit.min_distance() == 10 < 12
    assert not is_odfc_by_definition(orbit)
    assert not is_odfc_by_characterization(orbit)


def test_full_type_nonzero_v1_hook_breaks_optimality(ftx_q2k2, F2):
    hooked = _max_code_with_hook(
        ftx_q2k2, Matrix.identity(F2, 2),
        Matrix.identity(F2, 3).take_rows(1, 3),
        Matrix(F2, [[1, 0]], 2), Matrix(F2, [[1, 0, 0]], 3))
    assert len(hooked) == 9
    assert hooked.min_distance() == 10 < 12
    assert not is_odfc_by_definition(hooked)
