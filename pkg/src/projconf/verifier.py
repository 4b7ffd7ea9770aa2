"""Randomized exact verification of configuration statements.

Each trial samples a hypothesis polygon with integer coordinates, pushes it
through the diagonal-map word with exact arithmetic, and evaluates the
conclusion exactly. A passing trial is therefore a proof for that sample
point; generalization to all polygons is quantified with the
Schwartz-Zippel bound ``degree_bound / (2 * bound + 1)``.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from . import kernels as K
from .conics import PARABOLA, is_circumscribed, is_inscribed, tangent_line, vertices_on_two_lines
from .core import HomogeneousVector
from .equivalence import Labeling, equiv_witness, equivalent_mod_dihedral
from .errors import ProjconfError
from .polygons import Polygon, Word, apply_word, dual_polygon
from .sampling import DEFAULT_BOUND, parabola_parameters, rng_for, sample

HYPOTHESES = ("inscribed", "circumscribed", "two-point-sides", "general")
CONCLUSIONS = (
    "equivalent-to-input",
    "inscribed",
    "circumscribed",
    "vertices-on-two-lines",
    "equals-input-up-to-shift",
    "self-dual",
)
EQUIVALENCE_CONCLUSIONS = ("equivalent-to-input", "equals-input-up-to-shift", "self-dual")
STARRED_FLAG = "unproven in paper"
MAX_RESAMPLES = 64


@dataclass(frozen=True)
class TheoremStatement:
    """Hypothesis polygon -> word -> conclusion, with the expected verdict.

    ``labeling`` pins the dihedral labeling under which an equivalence
    conclusion must hold; None means any dihedral labeling is accepted.
    """

    name: str
    n: int
    hypothesis: str
    word: Word
    conclusion: str
    expected: str = "holds"
    labeling: Labeling | None = None
    starred: bool = False

    def __post_init__(self):
        object.__setattr__(self, "word", Word.parse(self.word))
        if self.hypothesis not in HYPOTHESES:
            raise ValueError(f"unknown hypothesis {self.hypothesis!r}")
        if self.conclusion not in CONCLUSIONS:
            raise ValueError(f"unknown conclusion {self.conclusion!r}")
        if self.expected not in ("holds", "fails"):
            raise ValueError("expected must be 'holds' or 'fails'")
        self.word.validate(self.n)
        if self.hypothesis == "two-point-sides" and self.n % 4:
            raise ValueError("two-point-sides needs n divisible by 4")
        if self.hypothesis in ("inscribed", "circumscribed") and self.n < 5:
            raise ValueError("inscribed/circumscribed hypotheses need n >= 5")
        if self.conclusion in ("inscribed", "circumscribed") and self.n < 5:
            raise ValueError("conic conclusions need n >= 5")
        if self.conclusion == "vertices-on-two-lines" and (self.n % 2 or self.n < 6):
            raise ValueError("vertices-on-two-lines needs an even n >= 6")

    @property
    def palindromic(self) -> bool:
        return self.word.is_palindrome()

    def key(self) -> tuple:
        return (self.n, self.hypothesis, str(self.word), self.conclusion)

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "n": self.n,
            "hypothesis": self.hypothesis,
            "word": str(self.word),
            "conclusion": self.conclusion,
            "expected": self.expected,
            "labeling": self.labeling.to_dict() if self.labeling else None,
            "starred": self.starred,
            "palindromic": self.palindromic,
        }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TheoremStatement":
        lab = d.get("labeling")
        return cls(
            name=str(d.get("name", "")),
            n=int(d["n"]),
            hypothesis=d["hypothesis"],
            word=Word.parse(str(d["word"])),
            conclusion=d["conclusion"],
            expected=d.get("expected", "holds"),
            labeling=Labeling.from_dict(lab) if lab else None,
            starred=bool(d.get("starred", False)),
        )


@dataclass
class VerificationReport:
    statement: TheoremStatement
    trials: int
    passes: int
    degeneracies_resampled: int
    degree_bound: int
    per_trial_error_bound: Fraction
    seed: int
    witness_labeling: list[Labeling] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    @property
    def matches_expectation(self) -> bool:
        if self.statement.expected == "holds":
            return self.passes == self.trials
        return self.passes == 0

    def to_dict(self) -> dict:
        st = self.statement
        return {
            "statement": st.name,
            "n": st.n,
            "hypothesis": st.hypothesis,
            "word": str(st.word),
            "conclusion": st.conclusion,
            "expected": st.expected,
            "trials": self.trials,
            "passes": self.passes,
            "degeneracies_resampled": self.degeneracies_resampled,
            "degree_bound": self.degree_bound,
            "per_trial_error_bound": f"{self.per_trial_error_bound.numerator}/{self.per_trial_error_bound.denominator}",
            "seed": self.seed,
            "witness_labeling": [lab.to_dict() for lab in self.witness_labeling],
            "flags": list(self.flags),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# --- degree bookkeeping -------------------------------------------------

def input_degrees(n: int, hypothesis: str) -> list[int]:
    """Degree of each sampled vertex as a polynomial in the random draws."""
    if hypothesis in ("inscribed", "circumscribed"):
        # (t, t^2, 1), or a chord (t + u, -1, -tu) after removing t - u
        return [2] * n
    if hypothesis == "general":
        return [1] * n
    if hypothesis == "two-point-sides":
        return [1] + [2] * (n - 2) + [5]
    raise ValueError(hypothesis)


def vertex_degrees(n: int, hypothesis: str, word: Word | str) -> list[int]:
    """Per-vertex degree bound after applying ``word``.

    A join adds the degrees of its two inputs. The first join of two
    parabola points (t : t^2 : 1), (u : u^2 : 1) is (t - u) times a
    degree-2 vector, so inscribed samples stay at degree 2 after one stage.
    """
    w = Word.parse(word)
    d = input_degrees(n, hypothesis)
    for stage, k in enumerate(w.application_order()):
        if stage == 0 and hypothesis == "inscribed":
            d = [2] * n
            continue
        d = [d[i] + d[(i + k) % n] for i in range(n)]
    return d


def _equivalence_degree(src: list[int], dst: list[int]) -> int:
    # equal projective coordinates against a 4-point frame: products of two
    # 3x3 determinants on each side
    return 6 * max(src) + 6 * max(dst)


def degree_bound(
    n: int,
    hypothesis: str,
    word: Word | str,
    conclusion: str = "equivalent-to-input",
    labelings: int = 1,
) -> int:
    """Total degree of a polynomial that must vanish whenever a trial passes.

    If the statement is false that polynomial is nonzero, so one trial
    passes with probability at most degree / |sample range|. ``labelings``
    multiplies equivalence conclusions when several labelings are tried.
    """
    d = vertex_degrees(n, hypothesis, word)
    if conclusion in ("equivalent-to-input", "equals-input-up-to-shift"):
        return labelings * _equivalence_degree(input_degrees(n, hypothesis), d)
    if conclusion == "self-dual":
        e = [d[i] + d[(i + 1) % n] for i in range(n)]
        return labelings * _equivalence_degree(d, e)
    if conclusion == "inscribed":
        # 6x6 determinant of the first five vertices plus one more
        return 0 if n == 5 else 2 * (sum(d[:5]) + max(d[5:]))
    if conclusion == "circumscribed":
        # Brianchon concurrency for side lines 0..4 and j
        if n == 5:
            return 0
        e = [d[i] + d[(i + 1) % n] for i in range(n)]
        return max(d[1] + d[2] + d[3] + d[4] + e[0] + e[4] + 2 * e[j] for j in range(5, n))
    if conclusion == "vertices-on-two-lines":
        best = 0
        for cls in (d[0::2], d[1::2]):
            best = max(best, sum(sorted(cls)[-3:]))
        return best
    raise ValueError(conclusion)


def statement_degree_bound(stmt: TheoremStatement) -> int:
    labelings = 1
    if stmt.conclusion in EQUIVALENCE_CONCLUSIONS and stmt.labeling is None:
        labelings = stmt.n if stmt.conclusion == "equals-input-up-to-shift" else 2 * stmt.n
    return degree_bound(stmt.n, stmt.hypothesis, stmt.word, stmt.conclusion, labelings)


# --- trials -------------------------------------------------------------

class TrialOutcome(NamedTuple):
    passed: bool
    labeling: Labeling | None
    resamples: int
    exhausted: bool = False


def _equivalence(A: Polygon, B: Polygon, pinned: Labeling | None, cyclic_only: bool):
    if pinned is not None:
        if equiv_witness(A, B, pinned) is not None:
            return True, pinned
    found = equivalent_mod_dihedral(A, B)
    if found is None:
        return False, None
    lab = found[0]
    if pinned is not None or (cyclic_only and lab.reflect):
        return False, lab
    return True, lab


def evaluate(stmt: TheoremStatement, P: Polygon) -> tuple[bool, Labeling | None]:
    """Exact verdict of the conclusion on one hypothesis polygon.

    Raises ProjconfError subclasses on degenerate samples.
    """
    Q = apply_word(P, stmt.word)
    c = stmt.conclusion
    if c == "inscribed":
        return is_inscribed(Q)[0], None
    if c == "circumscribed":
        return is_circumscribed(Q)[0], None
    if c == "vertices-on-two-lines":
        return vertices_on_two_lines(Q), None
    if c == "self-dual":
        return _equivalence(Q, dual_polygon(Q), stmt.labeling, False)
    return _equivalence(P, Q, stmt.labeling, c == "equals-input-up-to-shift")


def run_trial(stmt: TheoremStatement, seed: int, trial: int, bound: int = DEFAULT_BOUND) -> TrialOutcome:
    """One trial; degenerate samples are redrawn from (seed, trial, attempt)."""
    for attempt in range(MAX_RESAMPLES):
        try:
            P = sample(stmt.hypothesis, stmt.n, (seed, trial, attempt), bound, ordered=False)
            ok, lab = evaluate(stmt, P)
        except ProjconfError:
            continue
        return TrialOutcome(ok, lab, attempt)
    return TrialOutcome(False, None, MAX_RESAMPLES, exhausted=True)


def _run_chunk(args):
    stmt, seed, trials, bound = args
    return [run_trial(stmt, seed, t, bound) for t in trials]


def check_statement(
    stmt: TheoremStatement,
    trials: int = 100,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    workers: int = 1,
) -> VerificationReport:
    """Run ``trials`` exact trials and summarize them.

    Trial t depends only on (seed, t), so the report is identical for any
    number of workers.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if workers > 1:
        chunks = [list(range(i, trials, workers)) for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_run_chunk, [(stmt, seed, c, bound) for c in chunks]))
        by_trial = {}
        for c, outs in zip(chunks, parts):
            by_trial.update(zip(c, outs))
        outcomes = [by_trial[t] for t in range(trials)]
    else:
        outcomes = [run_trial(stmt, seed, t, bound) for t in range(trials)]
    return summarize(stmt, outcomes, seed, bound)


def summarize(stmt: TheoremStatement, outcomes: list[TrialOutcome], seed: int, bound: int) -> VerificationReport:
    passes = sum(o.passed for o in outcomes)
    resampled = sum(o.resamples for o in outcomes)
    deg = statement_degree_bound(stmt)
    witnesses = sorted({o.labeling for o in outcomes if o.passed and o.labeling is not None})
    flags = []
    if stmt.starred:
        flags.append(STARRED_FLAG)
    if len(witnesses) > 1:
        flags.append("inconsistent witnessing labeling")
    others = sorted({o.labeling for o in outcomes if not o.passed and o.labeling is not None})
    if others:
        flags.append("unpinned labeling witnessed: " + ", ".join(l.describe() for l in others))
    exhausted = sum(o.exhausted for o in outcomes)
    if exhausted:
        flags.append(f"{exhausted} trials degenerate after {MAX_RESAMPLES} resamples")
    if stmt.expected == "fails" and passes:
        flags.append("anomaly: expected-fails statement passed some trials")
    if stmt.conclusion in EQUIVALENCE_CONCLUSIONS and stmt.expected == "fails" and not others and not witnesses:
        flags.append("no dihedral labeling witnessed in any trial")
    return VerificationReport(
        statement=stmt,
        trials=len(outcomes),
        passes=passes,
        degeneracies_resampled=resampled,
        degree_bound=deg,
        per_trial_error_bound=Fraction(deg, 2 * bound + 1),
        seed=seed,
        witness_labeling=witnesses,
        flags=flags,
    )


# --- the built-in statements ----------------------------------------------

def _s(name, n, hyp, word, concl, expected="holds", labeling=None, starred=False):
    return TheoremStatement(name, n, hyp, Word.parse(word), concl, expected, labeling, starred)


def _shift(s: int) -> Labeling:
    return Labeling(False, s)


def builtin_suite() -> list[TheoremStatement]:
    """The published statements plus two negative controls.

    Pinned labelings were found by an unpinned dihedral scan and are kept
    as regression expectations. The 9-gon control pins the labeling that
    continues the 6/7/8 pattern (vertex i against the diagonal opposite it).
    """
    return [
        _s("inscribed-6-T2-equivalent", 6, "inscribed", "2", "equivalent-to-input", labeling=_shift(2)),
        _s("inscribed-7-T212-equivalent", 7, "inscribed", "212", "equivalent-to-input", labeling=_shift(1)),
        _s("inscribed-8-T21212-equivalent", 8, "inscribed", "21212", "equivalent-to-input", labeling=_shift(0)),
        _s("circumscribed-9-T313-equivalent", 9, "circumscribed", "313", "equivalent-to-input", labeling=_shift(1)),
        _s("inscribed-12-T3434343-equivalent", 12, "inscribed", "3434343", "equivalent-to-input", labeling=_shift(0)),
        _s("inscribed-8-T3-circumscribed", 8, "inscribed", "3", "circumscribed"),
        _s("inscribed-10-T313-circumscribed", 10, "inscribed", "313", "circumscribed"),
        _s("inscribed-12-T31313-circumscribed", 12, "inscribed", "31313", "circumscribed", starred=True),
        _s("inscribed-10-T1313-inscribed", 10, "inscribed", "1313", "inscribed"),
        _s("inscribed-12-T131313-inscribed", 12, "inscribed", "131313", "inscribed"),
        _s("inscribed-12-T535353-inscribed", 12, "inscribed", "535353", "inscribed"),
        _s("pentagon-T2-equivalent", 5, "general", "2", "equivalent-to-input", labeling=_shift(4)),
        _s("pentagon-T12-identity", 5, "general", "12", "equals-input-up-to-shift", labeling=_shift(1)),
        _s("inscribed-7-T2-self-dual", 7, "inscribed", "2", "self-dual", labeling=_shift(3)),
        _s("circumscribed-9-T3-self-dual", 9, "circumscribed", "3", "self-dual", labeling=_shift(4)),
        _s("two-point-8-pentagram2-two-lines", 8, "two-point-sides", "1212", "vertices-on-two-lines"),
        _s("two-point-12-pentagram4-two-lines", 12, "two-point-sides", "12121212", "vertices-on-two-lines"),
        _s("inscribed-9-T2121212-not-equivalent", 9, "inscribed", "2121212", "equivalent-to-input", "fails", labeling=_shift(8)),
        _s("inscribed-14-T3131313-not-circumscribed", 14, "inscribed", "3131313", "circumscribed", "fails"),
    ]


def run_suite(
    statements: Iterable[TheoremStatement],
    trials: int = 100,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    workers: int = 1,
) -> list[VerificationReport]:
    return [check_statement(s, trials, seed, bound, workers) for s in statements]


# --- classical baselines --------------------------------------------------

@dataclass
class ClassicalReport:
    trials: int
    pappus: int = 0
    pascal: int = 0
    brianchon: int = 0
    resampled: int = 0

    @property
    def all_passed(self) -> bool:
        return self.pappus == self.pascal == self.brianchon == self.trials

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "pappus": self.pappus,
            "pascal": self.pascal,
            "brianchon": self.brianchon,
            "degeneracies_resampled": self.resampled,
        }


def _c(a, b):
    c = K.cross(a, b)
    if c is None:
        raise ProjconfError("degenerate construction")
    return c


def pappus_trial(rng, bound: int = DEFAULT_BOUND) -> bool:
    """Three points on each of two lines; the three cross joins meet on a line."""
    def line_points():
        u = (rng.randint(-bound, bound), rng.randint(-bound, bound), 1)
        v = (rng.randint(-bound, bound), rng.randint(-bound, bound), 1)
        out = []
        for _ in range(3):
            s = rng.randint(-bound, bound)
            out.append(K.canon(*(a + s * b for a, b in zip(u, v))))
        return out

    a1, a2, a3 = line_points()
    b1, b2, b3 = line_points()
    x = _c(_c(a1, b2), _c(a2, b1))
    y = _c(_c(a1, b3), _c(a3, b1))
    z = _c(_c(a2, b3), _c(a3, b2))
    if x == y or y == z or x == z:
        raise ProjconfError("coincident Pappus points")
    return K.det3(x, y, z) == 0


def hexagon_on_parabola(rng, bound: int = DEFAULT_BOUND) -> list[tuple[int, int, int]]:
    return [(t, t * t, 1) for t in parabola_parameters(6, rng, bound, ordered=False)]


def pascal_trial(pts) -> bool:
    """Opposite sides of an inscribed hexagon meet in three collinear points."""
    p = pts
    x = _c(_c(p[0], p[1]), _c(p[3], p[4]))
    y = _c(_c(p[1], p[2]), _c(p[4], p[5]))
    z = _c(_c(p[2], p[3]), _c(p[5], p[0]))
    return K.det3(x, y, z) == 0


def brianchon_trial(pts) -> bool:
    """Main diagonals of the tangent hexagon at the same six points concur."""
    lines = [tangent_line(PARABOLA, HomogeneousVector(K.canon(*p))).coords for p in pts]
    v = [_c(lines[i], lines[(i + 1) % 6]) for i in range(6)]
    d = [_c(v[i], v[i + 3]) for i in range(3)]
    return K.det3(*d) == 0


def classical_checks(seed: int = 0, trials: int = 100, bound: int = DEFAULT_BOUND) -> ClassicalReport:
    report = ClassicalReport(trials)
    for t in range(trials):
        for attempt in range(MAX_RESAMPLES):
            try:
                ok = pappus_trial(rng_for((seed, "pappus", t, attempt)), bound)
            except ProjconfError:
                report.resampled += 1
                continue
            report.pappus += ok
            break
        for attempt in range(MAX_RESAMPLES):
            pts = hexagon_on_parabola(rng_for((seed, "pascal", t, attempt)), bound)
            try:
                pa = pascal_trial(pts)
                br = brianchon_trial(pts)
            except ProjconfError:
                report.resampled += 1
                continue
            report.pascal += pa
            report.brianchon += br
            break
    return report
