"""The twelve acceptance criteria, at full scale.

Each test prints one ``ACCEPTANCE <n> PASS|FAIL`` line.  Runs are
single-threaded so the wall-clock limits are honest.
"""

import io
import time

import pytest
from sympy import primerange

from ffhg.characters import MulChar, char_from_ideal, quadratic
from ffhg.cli import main
from ffhg.hypergeometric import hg2f1_float_oracle, hg2f1_table
from ffhg.verify import THEOREM_MODULI, context_for, verify_lemmas, verify_theorem


@pytest.fixture
def report(capsys):
    """Call as ``report(n, text, check)``; check() returns (ok, detail)."""

    def run(n, text, check, limit=None):
        t0 = time.perf_counter()
        try:
            ok, detail = check()
        except Exception as exc:  # a crash is a failure of the criterion
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - t0
        if ok and limit is not None and elapsed > limit:
            ok, detail = False, f"{detail}; over the {limit}s limit"
        with capsys.disabled():
            print(f"\nACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'}: {text} [{detail}; {elapsed:.1f}s]")
        assert ok, detail

    return run


def _theorem_campaign(tid, pmax):
    primes = cases = bad = 0
    first = None
    for p in primerange(3, pmax + 1):
        if p % THEOREM_MODULI[tid] != 1:
            continue
        primes += 1
        for rep in verify_theorem(context_for(p), tid):
            cases += rep.attempted
            bad += len(rep.mismatches)
            if rep.mismatches and first is None:
                first = (p, rep.object, rep.mismatches[0])
    detail = f"{primes} primes, {cases} values, {bad} mismatches"
    if first:
        detail += f"; first {first}"
    return bad == 0 and cases > 0, detail


def _lemma_campaign(tags, pmax, pmin=3):
    reports = cases = bad = 0
    first = None
    for p in primerange(pmin, pmax + 1):
        for rep in verify_lemmas(context_for(p), tags):
            if rep.skipped:
                continue
            reports += 1
            cases += rep.attempted
            bad += len(rep.mismatches)
            if rep.mismatches and first is None:
                first = (p, rep.object, rep.mismatches[0])
    detail = f"{reports} reports, {cases} cases, {bad} mismatches"
    if first:
        detail += f"; first {first}"
    return bad == 0 and cases > 0, detail


def test_criterion_01_theorem1(report):
    report(1, "Theorem 1, p = 1 mod 4, p <= 2000, every a", lambda: _theorem_campaign(1, 2000), 300)


def test_criterion_02_theorem2(report):
    report(2, "Theorem 2, p = 1 mod 8, p <= 2000, every a", lambda: _theorem_campaign(2, 2000), 300)


def test_criterion_03_theorem3(report):
    report(3, "Theorem 3, both identities, p = 1 mod 6, p <= 1000", lambda: _theorem_campaign(3, 1000), 180)


def test_criterion_04_theorem4(report):
    report(4, "Theorem 4, twisted character, p = 1 mod 12, p <= 2000", lambda: _theorem_campaign(4, 2000), 300)


def test_criterion_05_dnc(report):
    report(5, "D-family counts = Jacobi formula, N in 4,6,8,12, 20 pairs, p <= 500",
           lambda: _lemma_campaign(["dnc"], 500))


def test_criterion_06_prop_reduce(report):
    report(6, "F/S relation and 2F1 reduction, orders 3,4,6,8,12, all z, p <= 500",
           lambda: _lemma_campaign(["prop", "reduce"], 500))


def test_criterion_07_jacobi(report):
    report(7, "Jacobi sum norm, Galois action, reflections, J(phi,phi), F_eta(1), p <= 1000",
           lambda: _lemma_campaign(["jacobi"], 1000))


def test_criterion_08_hecke(report):
    report(8, "Hecke values: norm, membership, trace = a_p, four curves, p <= 10^4",
           lambda: _lemma_campaign(["hecke"], 10_000, pmin=5), 120)


def test_criterion_09_bridges(report):
    report(9, "Jacobi-Hecke bridges at N = 4, 6, 8, 12, p <= 2000",
           lambda: _lemma_campaign(["bridges", "hello-again", "d81"], 2000, pmin=5))


def _oracle_agreement():
    worst = 0.0
    count = 0
    for p in (13, 17, 29, 37, 41, 61, 73):
        ctx = context_for(p)
        phi = quadratic(ctx)
        shapes = []
        if p % 4 == 1:
            psi = char_from_ideal(ctx, 4)
            shapes.append((psi.conj(), psi, phi))
        for N in (6, 8, 12):
            if p % N == 1:
                psi = char_from_ideal(ctx, N)
                shapes.append((phi * psi, psi, phi))
        if p % 6 == 1:
            psi = char_from_ideal(ctx, 6) ** 2
            shapes.append((phi * psi, psi, phi))
        if p % 24 == 1:
            psi = MulChar(ctx, 24, 1)
            shapes.append((psi**5, psi**7, psi**11))
        for A, B, C in shapes:
            table = hg2f1_table(ctx, A, B, C)
            for a in range(p):
                d = abs(table[a].to_complex() - hg2f1_float_oracle(ctx, A, B, C, a))
                worst = max(worst, d)
                count += 1
    return worst < 1e-6 and count > 0, f"{count} values, max |delta| = {worst:.2e}"


def test_criterion_10_oracle(report):
    report(10, "exact 2F1 vs all-characters float definition, |delta| < 1e-6", _oracle_agreement)


def test_criterion_11_closed_forms(report):
    report(11, "closed forms of S_j at N = 8 and N = 12 (and N = 6), p <= 1000",
           lambda: _lemma_campaign(["closed-forms"], 1000))


def _determinism(tmp_path):
    args = ["verify", "--theorems", "1,2,3,4",
            "--lemmas", "prop,reduce,dnc,hello,hello-again,d81,main8,u-expansion,closed-forms",
            "--pmin", "2", "--pmax", "200"]
    outs = []
    for i, jobs in enumerate(("1", "1", "4")):
        path = tmp_path / f"run{i}.csv"
        code = main(args + ["--jobs", jobs, "--out", str(path)], io.StringIO())
        if code != 0:
            return False, f"run {i} exited {code}"
        outs.append(path.read_bytes())
    same = outs[0] == outs[1] == outs[2]
    rows = outs[0].count(b"\n") - 1
    return same, f"{rows} rows, three runs (jobs 1, 1, 4) byte-identical: {same}"


def test_criterion_12_determinism(report, tmp_path):
    report(12, "repeated verify runs give byte-identical CSV", lambda: _determinism(tmp_path))
