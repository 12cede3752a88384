"""One test per acceptance criterion; each prints a PASS/FAIL line.

The lines are also collected into the terminal summary by conftest.py, so
they show up in a plain ``pytest -v`` run.
"""

import math

import pytest

from conftest import GOLDEN, record
from qbrauer import branching, labels, lattice, molev, qarith, towers
from qbrauer.partitions import Partition, partitions_of
from qbrauer.qarith import RootOfUnityContext as C


def _report(number, ok, detail):
    record(number, ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_molev_relations():
    worst, bad = 0.0, []
    for N in (2, 3, 4):
        for ell in range(5, 13):
            if N >= ell:
                continue
            rep = molev.verify_relations(molev.representation(N, 4, q=1.0), tol=1e-10)
            rep_root = molev.verify_context(C(N, ell), 4, tol=1e-10)
            worst = max(worst, rep.worst, rep_root.worst)
            if not (rep.passed and rep_root.passed):
                bad.append((N, ell, rep.failing + rep_root.failing))
    _report(1, not bad, f"worst residual {worst:.2e} over N=2,3,4, n=4, ell=5..12 and q=1; failures {bad}")


def test_criterion_02_weight_cross_check():
    worst, count = 0.0, 0
    for N, ell in GOLDEN:
        ctx = C(N, ell)
        for lam in labels.brauer_label_set(ctx):
            a = qarith.brauer_weight(ctx, lam)
            b = branching.brauer_weight_from_character(ctx, lam)
            worst = max(worst, abs(a - b))
            count += 1
        for n in range(13):
            for lam in labels.hecke_labels(ctx, n):
                a = qarith.hecke_weight(ctx, lam)
                b = branching.hecke_weight_from_character(ctx, lam)
                worst = max(worst, abs(a - b))
                count += 1
    _report(2, worst < 1e-9, f"{count} labels, max |product - character| = {worst:.2e}")


def test_criterion_03_square_sums():
    reports = [lattice.verify_square_sums(C(N, ell), 1e-9) for N, ell in GOLDEN]
    n2 = reports[0]
    ok = all(r.passed for r in reports) and abs(n2.even_sum - 4) < 1e-9 * 4
    worst = max(max(r.rel_error, r.parity_rel_error) for r in reports)
    _report(3, ok, f"worst relative error {worst:.2e}; N=2, ell=8 even sum = {n2.even_sum:.12g}")


def test_criterion_04_folding_agrees_with_direct():
    mismatches, count = [], 0
    for N, ell in [(3, 7), (3, 9), (-4, 8), (4, 8)]:
        ctx = C(N, ell)
        for n in range(9):
            for lam in labels.hecke_labels(ctx, n):
                count += 1
                if branching.fusion_branch_direct(ctx, lam) != branching.fusion_branch_folded(ctx, lam):
                    mismatches.append((N, ell, list(lam)))
    ctx = C(4, 8)
    control = sum(
        branching.fusion_branch_direct(ctx, lam) != branching.fusion_branch_folded(ctx, lam, sign_name="epsilon")
        for n in range(9)
        for lam in labels.hecke_labels(ctx, n)
    )
    ok = not mismatches and control > 0
    _report(4, ok, f"{count} tables agree exactly (mismatches {mismatches}); untwisted control differs on {control} labels of (4,8)")


def test_criterion_05_index_agreement():
    expected = {(2, 8): 2 + math.sqrt(2), (3, 7): 4 * math.cos(math.pi / 14) ** 2, (4, 8): 4 + 2 * math.sqrt(2), (-4, 8): 4 + 2 * math.sqrt(2)}
    worst, bad = 0.0, []
    for N, ell in GOLDEN:
        ctx = C(N, ell)
        ratio, closed = towers.index_ratio(ctx), towers.index_closed_form(ctx)
        rel = abs(ratio - closed) / closed
        worst = max(worst, rel)
        if rel >= 1e-8 or ((N, ell) in expected and abs(closed - expected[N, ell]) / closed >= 1e-8):
            bad.append((N, ell, ratio, closed))
    _report(5, not bad, f"worst relative error {worst:.2e}; failures {bad}")


def _four_eight_expected():
    ctx = C(4, 8)
    out = set()
    for lam in ([2, 1, 1], [3, 1], [4, 3, 1], [3, 3, 2]):
        lam = Partition(lam)
        out.add(labels.periodicity_map("hecke", ctx, lam, (12 - lam.size) // 4))
    return out


def _criterion_6_parts():
    parts = {}
    for N, ell, kind, size in [(2, 8, "D", 5), (2, 10, "D", 6), (3, 7, "D", 8)]:
        g = towers.principal_graph(C(N, ell))
        parts[f"({N},{ell}) is {kind}{size}"] = (towers.is_isomorphic_to_dynkin(g, kind, size), towers.identify_dynkin(g) or "not Dynkin")
    g = towers.principal_graph(C(3, 9))
    units = [lam for lam in g.even if abs(g.a[lam] - 1) < 1e-9]
    doubles = [e for e, v in g.edges.items() if v == 2]
    others = [v for v in g.edges.values() if v > 2]
    parts["(3,9) three invertibles, one double edge"] = (len(units) == 3 and len(doubles) == 1 and not others, f"{len(units)} invertibles, double edges {doubles}")
    g = towers.inclusion_graph(C(4, 8), 12)
    units = {lam for lam in g.even if abs(g.a[lam] - 1) < 1e-9}
    want = {Partition(p) for p in ([3, 3, 3, 3], [4, 4, 4], [5, 5, 1, 1], [6, 2, 2, 2])}
    parts["(4,8) invertibles at n=12"] = (units == want, sorted(map(list, units)))
    nb = g.neighbours(Partition([2]))
    parts["(4,8) neighbours of [2]"] = (nb == _four_eight_expected(), sorted(map(list, nb)))
    iso = towers.graphs_isomorphic(towers.principal_graph(C(4, 8)), towers.principal_graph(C(-4, 8)))
    parts["(4,8) ~ (-4,8)"] = (iso, iso)
    return parts


def test_criterion_06_principal_graphs():
    parts = _criterion_6_parts()
    failed = {k: v[1] for k, v in parts.items() if not v[0]}
    passed = [k for k, v in parts.items() if v[0]]
    _report(6, not failed, f"ok: {passed}; failed: {failed}")


def test_criterion_07_pf_consistency():
    res = {(N, ell): towers.pf_consistency(towers.principal_graph(C(N, ell))) for N, ell in GOLDEN}
    worst = max(res.values())
    _report(7, worst < 1e-8, f"worst relative residual {worst:.2e}")


def test_criterion_08_positivity():
    positive = {c: qarith.positivity_report(C(*c)).all_positive for c in [(3, 7), (3, 9), (5, 9), (2, 8), (4, 8)]}
    witness = qarith.positivity_report(C(3, 8))
    neg4 = qarith.positivity_report(C(-4, 8))
    ok = all(positive.values()) and witness.first_negative is not None
    lam, w = witness.first_negative if witness.first_negative else (None, None)
    detail = (
        f"positive {positive}; (3,8) witness {list(lam) if lam is not None else None} with weight {w:.4g}; "
        f"(-4,8) all positive = {neg4.all_positive} while the sufficient condition predicts {qarith.sufficient_for_positivity(-4, 8)}"
    )
    _report(8, ok, detail)


def test_criterion_09_classical_limit():
    bad, count = [], 0
    for size in range(7):
        for lam in partitions_of(size):
            for N in sorted({max(2 * size, 2), max(2 * size, 2) + 1}):
                count += 1
                if branching.classical_branch(N, lam) != branching.littlewood_stable(lam, "O"):
                    bad.append((N, list(lam)))
    anchors = {
        (3, (2, 1)): {(2, 1): 1, (1,): 1},
        (3, (4,)): {(4,): 1, (2,): 1, (): 1},
    }
    for (N, lam), want in anchors.items():
        got = {tuple(m): v for m, v in branching.classical_branch(N, Partition(lam)).items()}
        if got != want:
            bad.append((N, list(lam), got))
    _report(9, not bad, f"{count} Littlewood comparisons plus 2 anchors; failures {bad}")


def test_criterion_10_asymptotics():
    table = towers.asymptotics_probe(3, range(7, 33, 2))
    ok = table.monotone() and table.settling() and towers.dim_p(3) == 5 and towers.dim_p(-4) == 5
    last = table.rows[-1].ratio
    _report(10, ok, f"ratio at ell=31 {last:.6g}, limit {table.limit:.6g}; dim p: N=3 -> {towers.dim_p(3)}, N=-4 -> {towers.dim_p(-4)}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
