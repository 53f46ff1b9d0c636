"""The eleven acceptance criteria, each checked exactly as stated.

Run under pytest (one PASS/FAIL line per criterion is printed in the
terminal summary) or directly: ``python tests/test_acceptance.py``.
A criterion whose stated value disagrees with the computation fails; it is
never relaxed here.
"""

import io
import json
import random
import sys
import time
from math import comb

import pytest

from hodgeloci.cli import main as cli_main
from hodgeloci.enumerative import c_underline_a, codim_VZ, fano_dim, table1
from hodgeloci.fermat_hodge import (
    FermatSpec,
    LinearCycleSpec,
    ag_ideal_piece,
    colon_Q_generators,
    fermat_jacobian,
    fermat_ring,
    linear_cycle_equations,
    linear_cycle_polys,
    pencil_check,
    prop_A1_report,
    subspace_polys,
    tangent_hodge_locus,
    tangent_VZ,
    zero_locus,
)
from hodgeloci.gradedideal import GradedIdeal, colon_piece
from hodgeloci.kloosterman import FamilySpec, prepare, rank_pipeline, stacked_rank
from hodgeloci.numberfield import cyclotomic_field, zeta_pow
from hodgeloci.polyring import PolyRing
from hodgeloci.singular_cubics import (
    decompose,
    line_through_sings,
    pullback,
    random_nodal_cubic,
    random_two_node_cubic,
)

RESULTS = {}

TABLE_HODGE = {
    4: [0, 1, 21, 1, 0],
    6: [0, 0, 8, 71, 8, 0, 0],
    8: [0, 0, 0, 45, 253, 45, 0, 0, 0],
    10: [0, 0, 0, 1, 220, 925, 220, 1, 0, 0, 0],
    12: [0, 0, 0, 0, 14, 1001, 3432, 1001, 14, 0, 0, 0, 0],
}


class Check:
    """Collects named sub-checks and the wall time of one criterion."""

    def __init__(self, number, budget):
        self.number = number
        self.budget = budget
        self.failures = []
        self.t0 = time.perf_counter()

    def expect(self, label, got, want):
        if got != want:
            self.failures.append(f"{label}: got {got}, expected {want}")

    def truth(self, label, cond):
        if not cond:
            self.failures.append(label)

    def finish(self):
        elapsed = time.perf_counter() - self.t0
        if self.budget is not None and elapsed > self.budget:
            self.failures.append(f"runtime {elapsed:.1f}s over budget {self.budget}s")
        ok = not self.failures
        RESULTS[self.number] = (ok, elapsed, list(self.failures))
        return ok


def _cli(*argv):
    out = io.StringIO()
    code = cli_main(list(argv), stdout=out)
    return code, json.loads(out.getvalue()) if code == 0 else None


def criterion_1():
    c = Check(1, 1.0)
    for n, row in TABLE_HODGE.items():
        code, doc = _cli("hodge-numbers", "-n", str(n), "-d", "3")
        c.expect(f"exit code n={n}", code, 0)
        c.expect(f"hodge n={n}", doc["hodge"] if doc else None, row)
    return c


def criterion_2():
    c = Check(2, 1.0)
    ns = [4, 6, 8, 10, 12]
    rows = table1(ns)
    L = [r.L for r in rows]
    c.expect("L column", L, [1, 4, 10, 20, 35])
    c.expect("L closed form", L, [(n // 2 + 1) * (n // 2) * (n // 2 - 1) // 6 for n in ns])
    c.expect("L as C_a", L, [c_underline_a(n, 3, [1] * (n // 2 + 1) + [2] * (n // 2 + 1)) for n in ns])
    c.expect("M column", [codim_VZ(n, 3, n // 2 - 3) - 1 for n in ns], [1, 7, 19, 38, 65])
    c.expect("M in table", [r.M for r in rows], [1, 7, 19, 38, 65])
    jac3 = [len(fermat_jacobian(FermatSpec(n)).kbase_piece(3)) for n in ns]
    c.expect("dimT vs Jacobian ring", [r.dimT for r in rows], jac3)
    c.expect("dimT binomial", [r.dimT for r in rows], [comb(n + 2, 3) for n in ns])
    return c


def criterion_3():
    c = Check(3, 5.0)
    F = cyclotomic_field(6)
    R = PolyRing(6, F)
    x = R.gens()
    I = GradedIdeal(R, [v ** 2 for v in x])
    z, za = zeta_pow(F, 1), zeta_pow(F, 3)
    R1, R2 = R.one(), R.one()
    for i in range(3):
        R1 = R1 * (x[2 * i] + x[2 * i + 1].scale(z))
        R2 = R2 * (x[2 * i] + x[2 * i + 1].scale(za))
    S = colon_piece(I, R1 + R2, 3)
    A = colon_piece(I, R1, 3).intersect(colon_piece(I, R2, 3))
    c.expect("dim (I:R1+R2)_3", S.dim, 55)
    c.expect("dim (I:R1)_3 cap (I:R2)_3", A.dim, 54)
    c.truth("intersection inside the colon", A <= S)
    c.expect("quotient dimension", S.quotient_dim(A), 1)
    for e in (0, 1, 2, 4, 5, 6):
        c.truth(f"additivity in degree {e}",
                colon_piece(I, R1 + R2, e) == colon_piece(I, R1, e).intersect(colon_piece(I, R2, e)))
    return c


def criterion_4():
    c = Check(4, 11 * 60.0)
    want = {6: (8, 7), 8: (20, 19), 10: (39, 38), 12: (66, 65)}
    for n, codims in want.items():
        pairs = [(1, 1), (1, -1), (2, 3)] if n <= 8 else [(1, 1)]
        t0 = time.perf_counter()
        for r, rr in pairs:
            rep = prop_A1_report(LinearCycleSpec(n), r, rr)
            c.expect(f"n={n} (r,rr)=({r},{rr})", (rep.codim_TVZ, rep.codim_TVZcycle), codims)
            c.expect(f"n={n} difference", rep.difference, 1)
        if n <= 8 and time.perf_counter() - t0 > 60:
            c.failures.append(f"n={n} over one minute")
    return c


def criterion_5():
    c = Check(5, 60.0)
    spec = LinearCycleSpec(6)
    c.truth("pencil intersections equal T V_Z", pencil_check(spec, [(1, 1), (1, 2), (2, 1)]))
    # the same statement spelled out on subspaces
    ring = fermat_ring(spec)
    J = fermat_jacobian(spec, ring)
    _, _, _, P1, P2 = linear_cycle_polys(spec, ring)
    fs = spec.fermat
    T = tangent_VZ(fs, P1, P2, J)
    spaces = [tangent_hodge_locus(fs, P1.scale(r) + P2.scale(rr), J) for r, rr in [(1, 1), (1, 2), (2, 1)]]
    for i in range(3):
        for j in range(i + 1, 3):
            c.truth(f"pair {i},{j}", spaces[i].intersect(spaces[j]) == T)
    return c


def criterion_6():
    c = Check(6, 17 * 60.0)
    for n, r11, r10, st in [(6, 7, 4, 8), (8, 19, 10, 20)]:
        t0 = time.perf_counter()
        spec = FamilySpec(n, "fermat")
        prep = prepare(spec)
        got11 = rank_pipeline(spec.with_ab(1, 1), prepared=prep).rank
        got10 = rank_pipeline(spec.with_ab(1, 0), prepared=prep).rank
        got_st = stacked_rank(spec, prepared=prep)
        c.expect(f"n={n} rank(1,1)", got11, r11)
        c.expect(f"n={n} rank(1,0)", got10, r10)
        c.expect(f"n={n} stacked", got_st, st)
        # colon-ideal route
        lc = LinearCycleSpec(n)
        ring = fermat_ring(lc)
        J = fermat_jacobian(lc, ring)
        _, _, _, P1, P2 = linear_cycle_polys(lc, ring)
        rep = prop_A1_report(lc, 1, 1)
        c.expect(f"n={n} (1,1) vs colon route", got11, rep.codim_TVZcycle)
        c.expect(f"n={n} (1,0) vs colon route", got10, tangent_hodge_locus(lc.fermat, P1, J).codim)
        c.expect(f"n={n} stacked vs colon route", got_st, rep.codim_TVZ)
        budget = 120 if n == 6 else 900
        if time.perf_counter() - t0 > budget:
            c.failures.append(f"n={n} over {budget}s")
    return c


def criterion_7():
    c = Check(7, 24 * 3600.0)
    spec = FamilySpec(10, "kloosterman", 1, 1)
    try:
        prep = prepare(spec)
    except Exception as exc:
        c.failures.append(f"smoothness check failed: {exc}")
    else:
        c.expect("n=10 rank(1,1)", rank_pipeline(spec, prepared=prep).rank, 39)
        c.expect("n=10 stacked", stacked_rank(spec, prepared=prep), 39)
    t0 = time.perf_counter()
    rs = FamilySpec(6, "random", seed=2)
    rprep = prepare(rs)
    r = rank_pipeline(rs, prepared=rprep).rank
    s = stacked_rank(rs, prepared=rprep)
    c.expect("random n=6 (rank, stacked)", (r, s), (7, 8))
    if time.perf_counter() - t0 > 600:
        c.failures.append("random n=6 over 10 min")
    return c


def criterion_8():
    c = Check(8, 60.0)
    spec = LinearCycleSpec(6)
    ring = fermat_ring(spec)
    J = fermat_jacobian(spec, ring)
    Q = linear_cycle_polys(spec, ring)[0]
    G = colon_Q_generators(spec, ring)
    for e in range(spec.n // 2 + 5):
        c.truth(f"degree {e}", colon_piece(J, Q, e) == G.piece(e).subspace)
    return c


def criterion_9():
    c = Check(9, 10.0)
    for n in (6, 8):
        spec = LinearCycleSpec(n)
        ring = fermat_ring(spec)
        P1 = linear_cycle_polys(spec, ring)[3]
        lin = ag_ideal_piece(spec, P1, 1)
        c.expect(f"n={n} dim (I_delta)_1", lin.dim, n // 2 + 1)
        c.truth(f"n={n} zero locus is the P^(n/2)",
                zero_locus(ring, subspace_polys(ring, lin, 1))
                == zero_locus(ring, linear_cycle_equations(spec, 1, ring)))
    return c


def criterion_10():
    c = Check(10, 30.0)
    rng = random.Random(2024)
    done = 0
    while done < 100:
        f, p = random_nodal_cubic(rng.choice([1, 2, 3, 4]), rng)
        sc = decompose(f, p)
        if sc.is_cone:
            continue
        c.truth(f"pullback vanishes (case {done})", pullback(sc).is_zero())
        done += 1
    for i in range(20):
        f, p, q = random_two_node_cubic(rng.choice([2, 3, 4]), rng)
        c.truth(f"line through two nodes (case {i})", line_through_sings(f, p, q))
    c.expect("fano_dim(10, 1, 3, k=3)", fano_dim(10, 1, 3, 3), 8)
    c.expect("fano_dim(10, 1, 3, k=4)", fano_dim(10, 1, 3, 4), 0)
    return c


def criterion_11():
    from properties import EXAMPLES, run_all

    c = Check(11, None)
    try:
        counts = run_all()
    except Exception as exc:
        c.failures.append(f"property failed: {type(exc).__name__}: {exc}")
    else:
        for name, k in counts.items():
            c.truth(f"{name}: only {k} cases", k >= EXAMPLES)
    return c


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def format_line(number):
    ok, elapsed, failures = RESULTS[number]
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s)"
    if failures:
        line += " - " + "; ".join(failures)
    return line


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 12)])
def test_criterion(crit):
    c = crit()
    ok = c.finish()
    assert ok, format_line(c.number)


if __name__ == "__main__":
    status = 0
    for crit in CRITERIA:
        c = crit()
        if not c.finish():
            status = 1
        print(format_line(c.number), flush=True)
    sys.exit(status)
