"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import random
import time
import warnings

import pytest

from conftest import ACCEPTANCE_LINES
from tropchow.chow import chow_hypersurface, chow_support_member, gamma0, gamma0_contains, restrict_to_H_identity
from tropchow.complexes import QuotientVector, balancing_check, cell_contains, complex_equal, linear_combination
from tropchow.fixtures import FlaggedFixtureWarning, contro_curves, load_fixture
from tropchow.minkowski import minkowski_sum, standard_plane
from tropchow.complexes import negate_complex
from tropchow.reconstruct import WORKING_ASSIGNMENT, random_balanced_fan, recover_multiplicities, separating_cones
from tropchow.troplin import PlueckerVector, line_through_two_points, translate_line


def record(n, ok, detail, elapsed, limit):
    within = elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    line = f"criterion {n}: {verdict} ({elapsed:.2f}s, limit {limit}s) {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok and within


def fixture(name):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", FlaggedFixtureWarning)
        return load_fixture(name)


def test_criterion_01_pluecker_reconstruction():
    t = time.perf_counter()
    q = line_through_two_points((10, 8, 0, 5, 13), (6, 8, 15, 21, 8))
    ok = q.coords == (14, 6, 8, 11, 13, 20, 18, 16, 8, 13)
    assert record(1, ok, f"p1 = {tuple(int(a) for a in q.coords)}", time.perf_counter() - t, 1)


def test_criterion_02_translation_identity():
    t = time.perf_counter()
    p1 = line_through_two_points((10, 8, 0, 5, 13), (6, 8, 15, 21, 8))
    p2 = translate_line(p1, (3, 0, 3, 0, 3))
    ok = p2.coords == (17, 12, 11, 14, 13, 23, 24, 19, 14, 16)
    assert record(2, ok, f"p2 = {tuple(int(a) for a in p2.coords)}", time.perf_counter() - t, 1)


def test_criterion_03_fink_non_distinguishing_pair():
    t = time.perf_counter()
    p1, p2 = fixture("p1").payload, fixture("p2").payload
    s1, s2 = fixture("fink_sigma1").payload, fixture("fink_sigma2").payload
    r11 = chow_support_member(p1, s1)
    r12 = chow_support_member(p1, s2)
    r22 = chow_support_member(p2, s2)
    r21 = chow_support_member(p2, s1)
    ok = (r11.member and r11.witness == QuotientVector((6, 8, 6, 11, 8)) and not r12.member
          and r22.member and r22.witness == QuotientVector((9, 8, 9, 11, 11)) and not r21.member)
    detail = f"(p1,S1)={r11.member} (p1,S2)={r12.member} (p2,S2)={r22.member} (p2,S1)={r21.member}"
    assert record(3, ok, detail, time.perf_counter() - t, 30)


def test_criterion_04_fink_skeleton_collision():
    t = time.perf_counter()
    s1, s2 = fixture("fink_sigma1").payload, fixture("fink_sigma2").payload
    neg = negate_complex(standard_plane(1, 4))
    f1, f2 = minkowski_sum(s1, neg), minkowski_sum(s2, neg)
    ok = complex_equal(f1, f2).equal
    assert record(4, ok, f"{len(f1.cells)} and {len(f2.cells)} cells, weighted equal", time.perf_counter() - t, 300)


def test_criterion_05_example_collision():
    t = time.perf_counter()
    s1, s2 = fixture("contro_sigma1").payload, fixture("contro_sigma2").payload
    z1, z2 = chow_hypersurface(s1, 1), chow_hypersurface(s2, 1)
    same_support = complex_equal(z1, z2, "support_only").equal
    weighted = complex_equal(z1, z2)
    ok = same_support and not weighted.equal
    w = "/".join(str(x) for x in weighted.weights or ())
    lit1, lit2 = (chow_hypersurface(fixture(n).payload, 1) for n in ("contro_sigma1_printed", "contro_sigma2_printed"))
    literal = complex_equal(lit1, lit2, "support_only").equal
    detail = (f"supports equal={same_support}, weights {w} at a witness point (min-convention fixtures; "
              f"printed signs read literally give supports equal={literal})")
    assert record(5, ok, detail, time.perf_counter() - t, 600)


def test_criterion_06_gamma0_validation():
    t = time.perf_counter()
    g = gamma0(1, 3).complex
    rays = g.rays()
    ok = len(rays) == 10 and len(g.cells) == 15 and all(m == 1 for _, m in g.cells)
    ok = ok and balancing_check(g).balanced
    ok = ok and all(gamma0_contains(PlueckerVector.from_quotient(1, 3, r)) for r in rays)
    ok = ok and all(gamma0_contains(PlueckerVector.from_quotient(1, 3, c.interior_point())) for c, _ in g.cells)
    rng = random.Random(2024)
    off = wrong = 0
    while off < 200:
        q = QuotientVector([rng.randint(-9, 9) for _ in range(6)])
        if any(cell_contains(c, q) for c, _ in g.cells):
            continue
        off += 1
        wrong += gamma0_contains(PlueckerVector.from_quotient(1, 3, q))
    ok = ok and wrong == 0
    assert record(6, ok, f"10 rays, 15 cones, balanced, {off - wrong}/200 off-fan points rejected",
                  time.perf_counter() - t, 60)


def test_criterion_07_injectivity_at_desk_scale():
    t = time.perf_counter()
    rng = random.Random(7)
    good = 0
    for _ in range(50):
        s = random_balanced_fan(rng)
        rays = [c.rays[0] for c, _ in s.cells]
        r = recover_multiplicities(rays, chow_hypersurface(s, 1))
        good += r.ok and r.multiplicities == tuple(m for _, m in s.cells)
    assert record(7, good == 50, f"{good}/50 random curves recovered exactly", time.perf_counter() - t, 900)


@pytest.mark.xfail(strict=True, reason="the printed assignment is degenerate for the rays along e2 and e3; "
                                       "see the decisions ledger and WORKING_ASSIGNMENT")
def test_criterion_08_separating_cones_certification():
    t = time.perf_counter()
    cert = separating_cones(strict=False)
    dims = sum(cert.dimension_ok.values())
    disj = sum(cert.interior_disjoint.values())
    alt = separating_cones(WORKING_ASSIGNMENT, strict=False)
    detail = (f"printed assignment: {dims}/8 dimension checks, {disj}/56 disjointness checks; "
              f"pos(e23,-f0) for rays 3,4,7,8 gives {sum(alt.dimension_ok.values())}/8 and "
              f"{sum(alt.interior_disjoint.values())}/56")
    assert record(8, cert.passed, detail, time.perf_counter() - t, 60)


def test_criterion_09_restriction_to_H():
    t = time.perf_counter()
    fans = [fixture("contro_sigma1").payload, fixture("contro_sigma2").payload]
    rng = random.Random(9)
    fans += [random_balanced_fan(rng) for _ in range(10)]
    results = [restrict_to_H_identity(s).equal for s in fans]
    assert record(9, all(results), f"{sum(results)}/12 curves satisfy the identity", time.perf_counter() - t, 600)


def test_criterion_10_linearity():
    t = time.perf_counter()
    rng = random.Random(10)
    good = 0
    for _ in range(20):
        s, s2 = random_balanced_fan(rng, nrays=3), random_balanced_fan(rng, nrays=3)
        a, b = rng.randint(-2, 3), rng.randint(-2, 3)
        left = chow_hypersurface(linear_combination([(a, s), (b, s2)]), 1)
        right = linear_combination([(a, chow_hypersurface(s, 1)), (b, chow_hypersurface(s2, 1))])
        good += complex_equal(left, right).equal
    assert record(10, good == 20, f"{good}/20 random pairs", time.perf_counter() - t, 600)


def test_criterion_11_anomaly_detection():
    t = time.perf_counter()
    with pytest.warns(FlaggedFixtureWarning, match="unbalanced-as-transcribed"):
        s6 = load_fixture("sec4_sigma6")
    r6 = balancing_check(s6.payload)
    r0 = balancing_check(fixture("sec4_sigma0").payload)
    r1 = balancing_check(fixture("sec4_sigma1").payload)
    ok = s6.flagged and not r6.balanced and r0.balanced and r1.balanced
    detail = f"Sigma6 residual {tuple(int(x) for x in r6.failures[0][1])}, Sigma0 and Sigma1 balanced, fixture flagged"
    assert record(11, ok, detail, time.perf_counter() - t, 1)
