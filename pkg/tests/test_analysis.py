import random
from fractions import Fraction

import pytest

import cyclevote._linalg as la
from cyclevote.analysis import (
    MaskingInfeasibleError,
    Profile,
    act_on_profile,
    catalog_for_space,
    decompose_profile,
    effective_basis,
    format_profile,
    generic4_scalars_to_params,
    kernel_basis,
    masking_profile,
    parse_profile,
    profile,
    profile_from_ballots,
    scaling_report,
    subspace_catalog,
    tally,
)
from cyclevote.ballots import build_ballot_space, favorite_order
from cyclevote.cyclic_orders import parse_order
from cyclevote.scoring import rule
from cyclevote.symmetric_group import parse_permutation
from _goldens import (
    PARADOX_PROFILE,
    PARADOX_SCORES,
    TIE_SPACE_PROFILE,
    TRAD_PROFILE,
    TRAD_SCORES,
)

CO4 = build_ballot_space("cyclic", 4, "paper")


def frac_profile(space, weights):
    return profile(space, weights)


def test_profile_validation_and_lookup():
    p = frac_profile(CO4, (2, 1, 0, 0, 0, 1))
    assert p[parse_order("(ACBD)")] == 2
    assert p.total() == 4
    with pytest.raises(ValueError):
        Profile(CO4, (Fraction(1),) * 5)


def test_profile_relabelling():
    # relabelling A<->B sends (2,1,1,0,0,0) to (1,2,0,0,0,1)
    p = frac_profile(CO4, (2, 1, 1, 0, 0, 0))
    q = act_on_profile(parse_permutation("(0 1)", 4), p)
    assert tuple(int(w) for w in q.weights) == (1, 2, 0, 0, 0, 1)


def test_tally_examples():
    p = frac_profile(CO4, (2, 1, 0, 0, 0, 1))
    r = tally(rule("generic4", 2, 1, 0), p)
    assert tuple(int(s) for s in r.scores) == (5, 4, 0, 0, 1, 2)
    assert r.winners == {parse_order("(ACBD)")}

    r2 = tally(rule("generic4", 2, 0, 1), p)
    assert tuple(int(s) for s in r2.scores) == (5, 3, 4, 4, 3, 5)
    assert r2.winners == {parse_order("(ACBD)"), parse_order("(ACDB)")}


def test_tally_zero_profile_ties_everything():
    m = rule("generic4", 2, 1, 0)
    r = tally(m, frac_profile(CO4, (0,) * 6))
    assert r.winners == frozenset(CO4.ballots)


def test_tally_space_mismatch():
    m = rule("rolo21")
    with pytest.raises(ValueError):
        tally(m, frac_profile(CO4, (0,) * 6))


def test_paradox_profile_golden():
    m = rule("rolo21")
    r = tally(m, frac_profile(m.ballot_space, PARADOX_PROFILE))
    assert tuple(int(s) for s in r.scores) == PARADOX_SCORES
    assert r.winners == {parse_order("(ACBD)")}
    ranked = sorted(r.scores)
    assert ranked[-1] - ranked[-2] == 96  # "nearly one hundred" winning margin
    last = min(r.scores)
    tied_last = {
        m.outcome_space[i] for i, s in enumerate(r.scores) if s == last
    }
    assert tied_last == {parse_order(t) for t in ("(ABCD)", "(ADCB)", "(ABDC)", "(ACDB)")}


def test_block_differential_and_tie_space():
    m = rule("rolo21")
    p3 = frac_profile(m.ballot_space, (3, 3, 3, 3, -3, -3, -3, -3) + (0,) * 16)
    r = tally(m, p3)
    assert tuple(int(s) for s in r.scores) == (24, -24, 0, 0, 0, 0)
    assert la.mat_vec(m.entries, TIE_SPACE_PROFILE) == la.zeros(6)


def test_trad_profile_golden():
    m = rule("trad21")
    r = tally(m, frac_profile(m.ballot_space, TRAD_PROFILE))
    assert tuple(int(s) for s in r.scores) == TRAD_SCORES
    assert r.winners == {parse_order("(ABCD)")}


def test_kernel_basis_properties():
    zero = rule("generic4", 0, 0, 0)
    assert len(kernel_basis(zero)) == 6
    m = rule("rolo21")
    basis = kernel_basis(m)
    assert len(basis) == 18
    for v in basis:
        assert la.mat_vec(m.entries, v) == la.zeros(6)


def test_kernel_contains_v_span_for_flat_rule():
    m = rule("rolo_x1", 1)
    cat = subspace_catalog("rolo4")
    for v in cat.entry("v").vectors:
        assert la.mat_vec(m.entries, v) == la.zeros(6)


def test_effective_basis_properties():
    m = rule("rolo21")
    eff = effective_basis(m)
    ker = kernel_basis(m)
    assert len(eff) + len(ker) == 24
    for e in eff:
        for k in ker:
            assert la.dot(e, k) == 0
    assert effective_basis(rule("generic4", 0, 0, 0)) == []


def test_effective_space_claims_for_rolo_and_trad():
    cat = subspace_catalog("rolo4")
    w1, w2, w3 = (cat.entry(k).vectors for k in ("w1", "w2", "w3"))
    wspan = list(w1) + list(w2) + list(w3)

    mx = rule("rolo_x1", 3)
    rows = effective_basis(mx)
    for i in range(3):
        v = la.add(la.add(la.scale(3, w1[i]), w2[i]), w3[i])
        assert la.solve_in_span(rows, v) is not None
    assert la.rank(list(rows) + wspan) == la.rank(rows) + la.rank(wspan) - 3

    mt = rule("trad21")
    rows_t = effective_basis(mt)
    mneg = rule("rolo_x1", -1)
    for i in range(3):
        v = la.add(w1[i], w2[i])
        assert la.solve_in_span(rows_t, v) is not None
        assert la.mat_vec(mneg.entries, v) == la.zeros(6)
    assert la.rank(list(rows_t) + wspan) == la.rank(rows_t) + la.rank(wspan) - 3


def test_catalogs_span_and_label_their_spaces():
    for space_id, dim, entry_count in (
        ("co4", 6, 3), ("rolo4", 24, 9), ("trad4", 24, 9), ("co5", 24, 5),
    ):
        cat = subspace_catalog(space_id)
        assert cat.dim == dim
        assert len(cat.entries) == entry_count
        assert la.rank(cat.all_vectors()) == dim
    # vector counts per 24-ballot entry: 1 + 4 + 3*3 + 1 + 3*3 = 24
    rolo = subspace_catalog("rolo4")
    assert [len(e.vectors) for e in rolo.entries] == [1, 4, 3, 3, 3, 1, 3, 3, 3]
    co5 = subspace_catalog("co5")
    assert [len(e.vectors) for e in co5.entries] == [1, 1, 5, 5, 12]
    with pytest.raises(ValueError):
        subspace_catalog("co6")


def test_nonadjacency_spanning_vectors_sum_to_zero():
    cat = subspace_catalog("co4")
    s1, s2, s3 = cat.entry("nonadj").vectors
    assert la.add(la.add(s1, s2), s3) == la.zeros(6)


def test_decompose_profile_worked_example():
    cat = subspace_catalog("co4")
    p = frac_profile(CO4, (2, 1, 0, 0, 0, 1))
    comps = decompose_profile(p, cat)
    by_label = {c.label: c for c in comps}
    assert by_label["T"].coefficients == (Fraction(2, 3),)
    assert by_label["nonadj"].coefficients == (Fraction(1, 3), Fraction(-1, 6), Fraction(0))
    assert by_label["rev"].coefficients == (Fraction(1, 2), Fraction(0), Fraction(-1, 2))
    total = la.zeros(6)
    for c in comps:
        total = la.add(total, c.component)
    assert total == p.weights


def test_decompose_single_column_profile():
    # one vote for the first order splits evenly across the three subspaces
    cat = subspace_catalog("co4")
    p = frac_profile(CO4, (2, 1, 0, 0, 0, 0))
    comps = {c.label: c for c in decompose_profile(p, cat)}
    assert comps["T"].coefficients == (Fraction(1, 2),)
    assert comps["nonadj"].coefficients == (Fraction(1, 2), Fraction(0), Fraction(0))
    assert comps["rev"].coefficients == (Fraction(1, 2), Fraction(0), Fraction(0))


def test_decompose_trivial_cases():
    cat = subspace_catalog("co4")
    ones = frac_profile(CO4, (1,) * 6)
    comps = decompose_profile(ones, cat)
    assert comps[0].coefficients == (Fraction(1),)
    assert all(c.component == la.zeros(6) for c in comps[1:])
    basis_vec = frac_profile(CO4, subspace_catalog("co4").entry("rev").vectors[0])
    comps = {c.label: c for c in decompose_profile(basis_vec, cat)}
    assert comps["rev"].coefficients == (Fraction(1), Fraction(0), Fraction(0))


def test_decompose_profile_dimension_mismatch():
    with pytest.raises(ValueError):
        decompose_profile(frac_profile(CO4, (1,) * 6), subspace_catalog("co5"))


def test_scaling_report_generic4():
    m = rule("generic4", 2, 1, 0)
    rep = scaling_report(m, subspace_catalog("co4"))
    assert rep.scalar("T") == 3
    assert rep.scalar("nonadj") == 3
    assert rep.scalar("rev") == 1
    assert rep.quadratic == {"T": 9, "nonadj": 9, "rev": 1}


def test_generic4_scalar_inversion_roundtrip():
    rnd = random.Random(2024)
    for _ in range(25):
        a, b, c = (Fraction(rnd.randint(-8, 8), rnd.choice((1, 2, 3))) for _ in range(3))
        rep = scaling_report(rule("generic4", a, b, c), subspace_catalog("co4"))
        t, u, v = rep.scalar("T"), rep.scalar("nonadj"), rep.scalar("rev")
        assert (t, u, v) == (a + b + 4 * c, a + b - 2 * c, a - b)
        assert generic4_scalars_to_params(t, u, v) == (a, b, c)


def test_scaling_report_generic5_scalars():
    a, b, c, d, e, f, g, h = 2, 3, 5, 7, 11, 13, 17, 19
    rep = scaling_report(rule("generic5", a, b, c, d, e, f, g, h), subspace_catalog("co5"))
    assert rep.scalar("T") == a + b + 5 * c + 5 * d + 5 * e + 5 * f + g + h
    assert rep.scalar("sign") == a + b - 5 * c - 5 * d + 5 * e + 5 * f - g - h
    assert rep.scalar("y") == a + b - c - d - e - f + g + h
    assert rep.scalar("z") == a + b + c + d - e - f - g - h
    (pairdiff,) = [e_ for e_ in rep.entries if e_.label == "pairdiff"]
    assert pairdiff.kind == "mapped"


def test_scaling_report_rolo_quadratics():
    m = rule("rolo_x1", 2)
    rep = scaling_report(m, subspace_catalog("rolo4"))
    assert rep.quadratic["rev"] == 24
    assert rep.quadratic["T"] == 4 * (2 + 1 + 1) ** 2
    # cross-space entries are mapped images with outcome-catalog coordinates
    t_entry = rep.entries[0]
    assert t_entry.label == "T" and t_entry.kind == "mapped"
    assert t_entry.image_coords[0][0] == 16  # image is 16 * the all-ones outcome


def test_adjusted_rule_annihilates_everything_but_pairdiff():
    adj = rule("adjusted_distance5")
    rep = scaling_report(adj, subspace_catalog("co5"))
    for label in ("T", "sign", "y", "z"):
        assert rep.scalar(label) == 0
    d5 = rule("distance5", 4, 3, 2, 1, 0)
    for v in subspace_catalog("co5").entry("pairdiff").vectors:
        assert la.mat_vec(adj.entries, v) == la.mat_vec(d5.entries, v)


def test_masking_profile_contract():
    m = rule("rolo21")
    target = parse_order("(ACBD)")
    decoys = {parse_order(t) for t in ("(ABCD)", "(ADCB)", "(ABDC)", "(ACDB)")}
    p = masking_profile(m, target, decoys, Fraction(3))
    assert all(w >= 0 for w in p.weights)
    r = tally(m, p)
    assert r.winners == {target}
    masked = sum(
        w for w, b in zip(p.weights, p.space.ballots) if favorite_order(b) != target
    )
    assert 2 * masked > p.total()


def test_masking_profile_deterministic():
    m = rule("rolo21")
    target = parse_order("(ACBD)")
    decoys = {parse_order("(ABCD)")}
    assert masking_profile(m, target, decoys, 2) == masking_profile(m, target, decoys, 2)


def test_masking_profile_infeasible_cases():
    target = parse_order("(ACBD)")
    with pytest.raises(MaskingInfeasibleError):
        masking_profile(rule("generic4", 2, 1, 0), target, {parse_order("(ABCD)")}, 1)
    with pytest.raises(ValueError):
        masking_profile(rule("rolo21"), target, {target}, 1)
    with pytest.raises(ValueError):
        masking_profile(rule("rolo21"), target, set(), 0)


def test_profile_file_roundtrip():
    space = build_ballot_space("rolo", 4, "paper")
    text = "# leading comment\nA|D,C\t3\nB|C,D\t-1/2\n"
    p = parse_profile(text, space)
    assert p[space.parse("A|D,C")] == 3
    assert p[space.parse("B|C,D")] == Fraction(-1, 2)
    assert sum(1 for w in p.weights if w) == 2
    again = parse_profile(format_profile(p), space)
    assert again == p
    with pytest.raises(ValueError):
        parse_profile("A|D,C\tx", space)
    with pytest.raises(ValueError):
        parse_profile("A|D,C 1 2", space)


def test_profile_from_ballots():
    p = profile_from_ballots(CO4, {parse_order("(ACBD)"): 2, parse_order("(ACDB)"): 1})
    assert tuple(int(w) for w in p.weights) == (2, 0, 0, 0, 0, 1)


def test_catalog_for_space():
    assert catalog_for_space(CO4).space_id == "co4"
    assert catalog_for_space(build_ballot_space("trad", 4)).space_id == "trad4"


def test_tally_is_linear_and_scale_invariant():
    rnd = random.Random(5)
    m = rule("rolo21")
    space = m.ballot_space
    for _ in range(10):
        weights = tuple(rnd.randint(-4, 9) for _ in range(24))
        p = frac_profile(space, weights)
        k = Fraction(rnd.randint(1, 5), rnd.randint(1, 3))
        scaled = frac_profile(space, tuple(k * w for w in p.weights))
        base = tally(m, p)
        boosted = tally(m, scaled)
        assert boosted.scores == tuple(k * s for s in base.scores)
        assert boosted.winners == base.winners
