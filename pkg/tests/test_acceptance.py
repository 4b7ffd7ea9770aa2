"""Acceptance criteria, one test and one PASS/FAIL line each.

Lines are printed as they finish and repeated in the pytest terminal
summary. Trial counts, time limits and error tolerances are pinned here.
"""
import json
import random
import time
from fractions import Fraction

from conftest import ACCEPTANCE_LINES
from projconf.conics import is_circumscribed, is_inscribed
from projconf.equivalence import Labeling, equiv_witness, equivalent_mod_dihedral
from projconf.errors import ProjconfError
from projconf.polygons import Word, apply_word, diagonal_map, dual_polygon, relabel
from projconf.sampling import sample_general
from projconf.search import SearchConfig, run_search
from projconf.verifier import (
    STARRED_FLAG,
    builtin_suite,
    check_statement,
    classical_checks,
)

TRIALS = 100
SEED = 0
MAX_ERROR = Fraction(1, 1000)
PENTAGON_SHIFT = 1  # found by the brute-force scan below, then pinned

_reports = {}


def report(name):
    if name not in _reports:
        st = next(s for s in builtin_suite() if s.name == name)
        _reports[name] = check_statement(st, TRIALS, SEED)
    return _reports[name]


def record(num, ok, detail):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def full(names):
    reps = [report(n) for n in names]
    ok = all(r.passes == TRIALS for r in reps)
    return ok, reps, ", ".join(f"{r.statement.name} {r.passes}/{r.trials}" for r in reps)


def test_criterion_01_classical():
    t = time.perf_counter()
    cr = classical_checks(SEED, TRIALS)
    dt = time.perf_counter() - t
    ok = cr.pappus == cr.pascal == cr.brianchon == TRIALS and dt < 10
    record(1, ok, f"pappus {cr.pappus}, pascal {cr.pascal}, brianchon {cr.brianchon} of {TRIALS}; {dt:.2f}s < 10s")


def test_criterion_02_inscribed_equivalences():
    names = ["inscribed-6-T2-equivalent", "inscribed-7-T212-equivalent", "inscribed-8-T21212-equivalent"]
    t = time.perf_counter()
    ok, reps, detail = full(names)
    dt = time.perf_counter() - t
    consistent = all(len(r.witness_labeling) == 1 for r in reps)
    record(2, ok and consistent and dt < 60,
           f"{detail}; one labeling each: {consistent}; {dt:.2f}s < 60s")


def test_criterion_03_circumscribed_nonagon():
    ok, reps, detail = full(["circumscribed-9-T313-equivalent"])
    record(3, ok and len(reps[0].witness_labeling) == 1, detail)


def test_criterion_04_dodecagon():
    t = time.perf_counter()
    ok, _, detail = full(["inscribed-12-T3434343-equivalent"])
    dt = time.perf_counter() - t
    record(4, ok and dt < 600, f"{detail}; {dt:.2f}s < 600s")


def test_criterion_05_circumscribed_images():
    names = ["inscribed-8-T3-circumscribed", "inscribed-10-T313-circumscribed",
             "inscribed-12-T31313-circumscribed"]
    ok, reps, detail = full(names)
    starred = STARRED_FLAG in reps[2].flags and all(STARRED_FLAG not in r.flags for r in reps[:2])
    record(5, ok and starred, f"{detail}; third flagged '{STARRED_FLAG}': {starred}")


def test_criterion_06_negative_controls():
    reps = [report("inscribed-9-T2121212-not-equivalent"),
            report("inscribed-14-T3131313-not-circumscribed")]
    ok = all(r.passes == 0 and r.trials == TRIALS for r in reps)
    record(6, ok, ", ".join(f"{r.statement.name} {r.passes}/{r.trials}" for r in reps))


def _cyclic_shift(P, Q):
    return [s for s in range(P.n) if equiv_witness(P, Q, Labeling(False, s)) is not None]


def test_criterion_07_pentagons():
    counts = {"inscribed": 0, "circumscribed": 0, "self-dual": 0, "T12 shift": 0}
    shifts = set()
    resampled = 0
    for t in range(TRIALS):
        for attempt in range(20):
            try:
                P = sample_general(5, ("pentagons", SEED, t, attempt))
                Q = apply_word(P, "12")
                D = dual_polygon(P)
                found = _cyclic_shift(P, Q)
            except ProjconfError:
                resampled += 1
                continue
            break
        counts["inscribed"] += is_inscribed(P)[0]
        counts["circumscribed"] += is_circumscribed(P)[0]
        counts["self-dual"] += equivalent_mod_dihedral(P, D) is not None
        shifts.update(found)
        counts["T12 shift"] += equiv_witness(P, Q, Labeling(False, PENTAGON_SHIFT)) is not None
    ok = all(v == TRIALS for v in counts.values()) and shifts == {PENTAGON_SHIFT}
    record(7, ok, f"{counts} of {TRIALS}; shifts seen {sorted(shifts)}, pinned {PENTAGON_SHIFT}; "
                  f"resampled {resampled}")


def test_criterion_08_remarks():
    ok, _, detail = full(["inscribed-7-T2-self-dual", "circumscribed-9-T3-self-dual",
                          "inscribed-12-T535353-inscribed", "two-point-8-pentagram2-two-lines",
                          "two-point-12-pentagram4-two-lines"])
    conj = 0
    for t in range(TRIALS):
        P = sample_general(12, ("relabel", SEED, t))
        conj += diagonal_map(relabel(P, 5), 1) == relabel(diagonal_map(P, 5), 5)
    record(8, ok and conj == TRIALS, f"{detail}; T_1 sigma = sigma T_5 on 12-gons {conj}/{TRIALS}")


def test_criterion_09_structural_invariants():
    rng = random.Random(SEED)
    fails = {"T_k^2": 0, "T_(n-k)": 0, "dual^2": 0, "palindrome^2": 0}
    resampled = 0
    done = 0
    while done < 1000:
        n = rng.randint(5, 12)
        letters = [k for k in range(1, n) if 2 * k != n]
        k = rng.choice(letters)
        half = [rng.choice(letters) for _ in range(rng.randint(0, 2))]
        w = Word(tuple(half + [rng.choice(letters)] + half[::-1]))
        try:
            P = sample_general(n, ("invariants", SEED, done, resampled))
            Tk = diagonal_map(P, k)
            checks = {
                "T_k^2": diagonal_map(Tk, k) == relabel(P, 1, k),
                "T_(n-k)": diagonal_map(P, n - k) == relabel(Tk, 1, -k),
                "dual^2": dual_polygon(dual_polygon(P)) == relabel(P, 1, 1),
                "palindrome^2": apply_word(apply_word(P, w), w) == relabel(P, 1, sum(w.letters)),
            }
        except ProjconfError:
            resampled += 1
            continue
        for name, good in checks.items():
            fails[name] += not good
        done += 1
    record(9, not any(fails.values()), f"failures {fails} over {done} polygons, n in [5,12]; resampled {resampled}")


_search = {}


def default_search(workers):
    if workers not in _search:
        t = time.perf_counter()
        rep = run_search(SearchConfig(workers=workers), quiet=True)
        _search[workers] = (rep, time.perf_counter() - t)
    return _search[workers]


def test_criterion_10_search_regression():
    rep, dt = default_search(1)
    again, _ = default_search(2)
    same = json.dumps(rep.to_dict(True)) == json.dumps(again.to_dict(True))
    ok = rep.complete and not rep.novel and dt < 1800 and same
    record(10, ok, f"recovered {len(rep.completeness['recovered'])}, missed {rep.completeness['missed']}, "
                   f"novel {len(rep.novel)}; {dt:.0f}s < 1800s; workers 1 vs 2 identical: {same}")


def test_criterion_11_error_bounds_and_determinism():
    suite = builtin_suite()
    first = [check_statement(s, TRIALS, SEED) for s in suite]
    second = [check_statement(s, TRIALS, SEED) for s in suite]
    worst = max(r.per_trial_error_bound for r in first)
    bounded = all(r.degree_bound > 0 for r in first) and worst <= MAX_ERROR
    same = [a.to_json() for a in first] == [b.to_json() for b in second]
    record(11, bounded and same, f"{len(first)} reports, worst per-trial error {float(worst):.2e} <= 1e-3; "
                                 f"byte-identical rerun: {same}")
