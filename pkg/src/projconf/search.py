"""Search for configuration statements over words in diagonal maps.

Candidates are (n, hypothesis, word) triples. Each is screened on a few
small-coordinate exact trials against every requested conclusion;
survivors are confirmed with full-range trials and then classified:

* ``known``      same normal form as a builtin holds-statement
* ``confirmed``  derivable from the builtin statements by closure rules
* ``novel``      passed confirmation but not derivable

Normal forms rest on three identities: T_{n-k} is a shifted T_k, T_k T_k
is a cyclic shift, and conjugating by a unit relabeling i -> u*i turns
T_k into T_{uk}. A circumscribed polygon is T_1 of an inscribed one (its
sides are tangent lines, i.e. points of the dual conic), which moves
circumscribed hypotheses and conclusions onto the inscribed ones.
"""
from __future__ import annotations

import itertools
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .conics import is_circumscribed, is_inscribed
from .errors import ProjconfError
from .polygons import Word, apply_word
from .sampling import DEFAULT_BOUND, sample
from .verifier import (
    HYPOTHESES,
    TheoremStatement,
    _equivalence,
    builtin_suite,
    check_statement,
)

SEARCH_CONCLUSIONS = ("equivalent-to-input", "inscribed", "circumscribed")
CONCLUSION_ALIASES = {"equivalent": "equivalent-to-input", "equiv": "equivalent-to-input"}
STATUSES = ("screened-out", "confirmed", "known", "novel")
SCREEN_BOUND = 100
SCREEN_ATTEMPTS = 8

# Classical facts outside the builtin list that the closure may use.
# The pentagram map is an involution on hexagons modulo projective maps.
BACKGROUND_FACTS = (("hexagon-pentagram-involution", 6, "E_gen", (1, 2, 1, 2)),)


@dataclass
class SearchConfig:
    n_range: tuple[int, int] = (5, 12)
    max_letter: int = 4
    max_word_length: int = 7
    hypotheses: tuple[str, ...] = ("inscribed", "circumscribed")
    conclusions: tuple[str, ...] = SEARCH_CONCLUSIONS
    screen_trials: int = 3
    confirm_trials: int = 25
    seed: int = 0
    workers: int = 1
    screen_bound: int = SCREEN_BOUND
    confirm_bound: int = DEFAULT_BOUND
    collision_checks: int = 8

    def __post_init__(self):
        self.n_range = tuple(int(x) for x in self.n_range)
        self.hypotheses = tuple(self.hypotheses)
        self.conclusions = tuple(CONCLUSION_ALIASES.get(c, c) for c in self.conclusions)
        lo, hi = self.n_range
        if lo < 4 or hi < lo:
            raise ValueError(f"bad n_range {self.n_range}")
        if not 1 <= self.max_letter <= hi - 1:
            raise ValueError("max_letter must be in [1, max n - 1]")
        if self.max_word_length < 1:
            raise ValueError("max_word_length must be >= 1")
        if not 1 <= self.screen_trials <= self.confirm_trials:
            raise ValueError("need 1 <= screen_trials <= confirm_trials")
        for h in self.hypotheses:
            if h not in HYPOTHESES:
                raise ValueError(f"unknown hypothesis {h!r}")
        for c in self.conclusions:
            if c not in SEARCH_CONCLUSIONS:
                raise ValueError(f"search conclusions are {SEARCH_CONCLUSIONS}, got {c!r}")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["n_range"] = list(self.n_range)
        d["hypotheses"] = list(self.hypotheses)
        d["conclusions"] = list(self.conclusions)
        # results do not depend on the worker count, so reports omit it
        del d["workers"]
        return d


# --- word normal forms ----------------------------------------------------

def norm_letter(k: int, n: int) -> int:
    k %= n
    return min(k, n - k)


def reduce_letters(letters: Iterable[int], n: int) -> tuple[int, ...]:
    """Normalize k ~ n-k and cancel adjacent equal letters (T_k T_k is a shift)."""
    out: list[int] = []
    for k in letters:
        k = norm_letter(k, n)
        if out and out[-1] == k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def units(n: int) -> list[int]:
    # u and n-u give the same normalized letters
    return [u for u in range(1, n // 2 + 1) if math.gcd(u, n) == 1] or [1]


def word_variants(letters: tuple[int, ...], n: int) -> set[tuple[int, ...]]:
    """All images of a reduced word under unit conjugation and reversal."""
    out = set()
    for u in units(n):
        w = tuple(norm_letter(u * k, n) for k in letters)
        out.add(w)
        out.add(w[::-1])
    return out


def canonical_key(n: int, word) -> tuple[int, ...]:
    letters = word.letters if isinstance(word, Word) else tuple(word)
    return min(word_variants(reduce_letters(letters, n), n))


def key_text(key: tuple[int, ...]) -> str:
    return str(Word(key)) if key else "(shift)"


def normal_form(n: int, hypothesis: str, word, conclusion: str) -> tuple[int, str, tuple[int, ...]] | None:
    """(n, class, key), where class is E_gen, E_ins or I.

    E_gen: words with T_w(P) ~ P for general P; E_ins: the same for
    inscribed P; I: words mapping inscribed polygons to inscribed ones.
    Returns None for statements outside these classes.
    """
    w = tuple(word.letters if isinstance(word, Word) else word)
    if conclusion in ("equivalent-to-input", "equals-input-up-to-shift"):
        if hypothesis == "general":
            return n, "E_gen", canonical_key(n, w)
        if hypothesis == "inscribed":
            return n, "E_ins", canonical_key(n, w)
        if hypothesis == "circumscribed":
            return n, "E_ins", canonical_key(n, (1,) + w + (1,))
        return None
    if conclusion in ("inscribed", "circumscribed"):
        if hypothesis == "circumscribed":
            w = w + (1,)
        elif hypothesis != "inscribed":
            return None
        if conclusion == "circumscribed":
            w = (1,) + w
        return n, "I", canonical_key(n, w)
    return None


# --- closure of known facts -----------------------------------------------

class Closure:
    """Word sets E_gen <= E_ins <= I per n, saturated up to a length cap.

    Rules: every set is closed under concatenation, reversal and unit
    conjugation; E_gen under conjugation by any word; E_ins under
    conjugation by words of I; E_gen <= E_ins <= I. Reversal of I is
    sound because T_w restricted to inscribed polygons is birational
    onto an irreducible variety of the same dimension.
    """

    def __init__(self, seeds: Iterable[tuple[str, int, str, tuple[int, ...]]], cap: int):
        self.cap = cap
        self.seeds: dict[int, list[tuple[str, str, tuple[int, ...]]]] = {}
        for name, n, cls, w in seeds:
            self.seeds.setdefault(n, []).append((name, cls, reduce_letters(w, n)))
        self._cache: dict[int, dict[str, frozenset]] = {}

    def _alphabet(self, n: int) -> list[int]:
        return [k for k in range(1, n // 2 + 1) if 2 * k != n]

    def sets(self, n: int) -> dict[str, frozenset]:
        if n not in self._cache:
            self._cache[n] = self._saturate(n)
        return self._cache[n]

    def _saturate(self, n: int) -> dict[str, frozenset]:
        cap = self.cap
        S = {"E_gen": set(), "E_ins": set(), "I": set()}
        order = ("E_gen", "E_ins", "I")
        queue: list[tuple[str, tuple[int, ...]]] = []

        def add(cls, w):
            if len(w) > cap:
                return
            for c in order[order.index(cls):]:
                for v in word_variants(w, n):
                    if v not in S[c]:
                        S[c].add(v)
                        queue.append((c, v))

        add("E_gen", ())
        if n == 5:
            # five points lie on a conic: every pentagon is inscribed
            add("E_gen", (1,))
            add("E_gen", (2,))
        for _, cls, w in self.seeds.get(n, []):
            add(cls, w)
        alphabet = self._alphabet(n)
        while queue:
            cls, w = queue.pop()
            for other in list(S[cls]):
                add(cls, reduce_letters(w + other, n))
                add(cls, reduce_letters(other + w, n))
            if cls == "E_gen" and w:
                for v in self._words_up_to(alphabet, n, (cap - len(w)) // 2 + len(w)):
                    add(cls, reduce_letters(v[::-1] + w + v, n))
            elif cls == "E_ins":
                for v in list(S["I"]):
                    add(cls, reduce_letters(v[::-1] + w + v, n))
            elif cls == "I":
                for e in list(S["E_ins"]):
                    add("E_ins", reduce_letters(w[::-1] + e + w, n))
        return {c: frozenset(s) for c, s in S.items()}

    @staticmethod
    def _words_up_to(alphabet, n, length):
        out = [()]
        frontier = [()]
        for _ in range(length):
            frontier = [w + (k,) for w in frontier for k in alphabet if not w or w[-1] != k]
            out.extend(frontier)
        return out

    def derivable(self, nf: tuple[int, str, tuple[int, ...]]) -> bool:
        n, cls, key = nf
        return key in self.sets(n)[cls]


def builtin_seeds(statements=None) -> list[tuple[str, int, str, tuple[int, ...]]]:
    out = []
    for st in statements if statements is not None else builtin_suite():
        if st.expected != "holds":
            continue
        nf = normal_form(st.n, st.hypothesis, st.word, st.conclusion)
        if nf is not None:
            out.append((st.name, nf[0], nf[1], nf[2]))
    out.extend(BACKGROUND_FACTS)
    return out


# --- enumeration ----------------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    """A word to screen under one hypothesis, for the conclusions not yet covered.

    ``keys`` pairs each conclusion with the canonical key of the statement's
    normal form; two candidates with equal keys state the same theorem.
    """

    n: int
    hypothesis: str
    word: Word
    keys: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def conclusions(self) -> tuple[str, ...]:
        return tuple(c for c, _ in self.keys)

    def key(self, conclusion: str) -> tuple[int, ...]:
        return dict(self.keys)[conclusion]


def _letters_for(n: int, max_letter: int) -> list[int]:
    return [k for k in range(1, min(max_letter, n - 1) + 1) if 2 * k != n]


def reduced_words(n: int, max_letter: int, max_len: int) -> Iterator[Word]:
    """Words over {1..max_letter} in order of length, then lexicographic.

    Skipped: letters equal to n/2 (T_{n/2} repeats vertices), words that
    reduce to shorter ones, and words whose normalized letters (k ~ n-k)
    repeat an earlier word.
    """
    seen = set()
    letters = _letters_for(n, max_letter)
    for length in range(1, max_len + 1):
        for w in itertools.product(letters, repeat=length):
            red = reduce_letters(w, n)
            if len(red) != length or red in seen:
                continue
            seen.add(red)
            yield Word(w)


def word_classes(n: int, max_letter: int, max_len: int) -> dict[tuple[int, ...], list[Word]]:
    """Reduced words grouped by canonical key (letter normalization, reversal, units)."""
    out: dict[tuple[int, ...], list[Word]] = {}
    for w in reduced_words(n, max_letter, max_len):
        out.setdefault(canonical_key(n, w), []).append(w)
    return out


def enumerate_candidates(config: SearchConfig) -> Iterator[Candidate]:
    """Deterministic stream; each (hypothesis, conclusion, key) is screened once.

    Unit conjugation and reversal preserve inscribed polygons and dihedral
    equivalence but not the side order that makes a polygon circumscribed,
    so keys are taken on the inscribed normal form of each statement.
    """
    lo, hi = config.n_range
    for n in range(lo, hi + 1):
        words = list(reduced_words(n, config.max_letter, config.max_word_length))
        for h in config.hypotheses:
            if not _hypothesis_ok(h, n):
                continue
            seen = set()
            for w in words:
                keys = []
                for c in config.conclusions:
                    nf = normal_form(n, h, w, c)
                    if nf is None or (c, nf) in seen:
                        continue
                    seen.add((c, nf))
                    keys.append((c, nf[2]))
                if keys:
                    yield Candidate(n, h, w, tuple(keys))


def count_candidates(config: SearchConfig) -> int:
    return sum(1 for _ in enumerate_candidates(config))


def _hypothesis_ok(h: str, n: int) -> bool:
    if h in ("inscribed", "circumscribed"):
        return n >= 5
    if h == "two-point-sides":
        return n % 4 == 0
    return n >= 4


# --- screening and confirmation ---------------------------------------------

@dataclass
class CandidateTheorem:
    statement: TheoremStatement
    status: str
    key: str
    screen_passes: int = 0
    screen_trials: int = 0
    screen_degenerate: int = 0
    provenance: list[str] = field(default_factory=list)
    report: dict | None = None
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = self.statement.to_dict()
        d.update(
            status=self.status,
            key=self.key,
            screen={"passes": self.screen_passes, "trials": self.screen_trials, "degenerate": self.screen_degenerate},
            provenance=list(self.provenance),
            flags=list(self.flags),
        )
        if self.report is not None:
            d["report"] = self.report
        return d


def _verdict(P, Q, conclusion):
    if conclusion == "inscribed":
        return is_inscribed(Q)[0], None
    if conclusion == "circumscribed":
        return is_circumscribed(Q)[0], None
    return _equivalence(P, Q, None, False)


def screen(n: int, hypothesis: str, word: Word, conclusions, trials: int, seed: int, bound: int):
    """Per-conclusion lists of (verdict, labeling) and degeneracy counts.

    Trial samples depend only on (seed, n, hypothesis, trial, attempt), so
    all words of one (n, hypothesis) see the same polygons. A verdict of
    None means every attempt degenerated.
    """
    results = {c: [] for c in conclusions}
    degenerate = {c: 0 for c in conclusions}
    for t in range(trials):
        pending = list(conclusions)
        for attempt in range(SCREEN_ATTEMPTS):
            try:
                P = sample(hypothesis, n, ("screen", seed, n, hypothesis, t, attempt), bound, ordered=False)
                Q = apply_word(P, word)
            except ProjconfError:
                for c in pending:
                    degenerate[c] += 1
                continue
            left = []
            for c in pending:
                try:
                    results[c].append(_verdict(P, Q, c))
                except ProjconfError:
                    degenerate[c] += 1
                    left.append(c)
            pending = left
            if not pending:
                break
        for c in pending:
            results[c].append((None, None))
    return results, degenerate


def _screen_candidate(args):
    cand, config = args
    res, deg = screen(cand.n, cand.hypothesis, cand.word, cand.conclusions,
                      config.screen_trials, config.seed, config.screen_bound)
    return cand, res, deg


class Classifier:
    def __init__(self, config: SearchConfig, statements=None):
        self.config = config
        self.statements = list(statements) if statements is not None else builtin_suite()
        # known means the same statement up to word identities
        self.known: dict[tuple, list[TheoremStatement]] = {}
        for st in self.statements:
            k = statement_key(st)
            if st.expected == "holds" and k is not None:
                self.known.setdefault(k, []).append(st)
        self.closure = Closure(builtin_seeds(self.statements), config.max_word_length + 4)

    def classify(self, cand: Candidate, conclusion: str, verdicts, degenerate: int) -> CandidateTheorem:
        cfg = self.config
        stmt = TheoremStatement(
            name=f"search-{cand.n}-{cand.hypothesis}-T{cand.word}-{conclusion}",
            n=cand.n, hypothesis=cand.hypothesis, word=cand.word, conclusion=conclusion,
        )
        passes = sum(1 for v, _ in verdicts if v)
        out = CandidateTheorem(stmt, "screened-out", key_text(cand.key(conclusion)), passes, len(verdicts), degenerate)
        if degenerate > len(verdicts) // 2:
            out.flags.append("degenerate-prone")
        if any(v is None for v, _ in verdicts):
            out.flags.append("degenerate in screening")
            return out
        if passes < len(verdicts):
            return out
        labs = {lab for _, lab in verdicts}
        pinned = labs.pop() if len(labs) == 1 else None
        if conclusion == "equivalent-to-input" and pinned is not None:
            stmt = TheoremStatement(stmt.name, stmt.n, stmt.hypothesis, stmt.word, conclusion, labeling=pinned)
        nf = normal_form(cand.n, cand.hypothesis, cand.word, conclusion)
        matches = self.known.get((cand.n, cand.hypothesis, conclusion, nf[2]), [])
        if any(m.starred for m in matches):
            stmt = TheoremStatement(stmt.name, stmt.n, stmt.hypothesis, stmt.word, conclusion,
                                    labeling=stmt.labeling, starred=True)
        out.statement = stmt
        rep = check_statement(stmt, cfg.confirm_trials, cfg.seed, cfg.confirm_bound)
        out.report = rep.to_dict()
        if rep.passes < rep.trials:
            out.flags.append(f"failed confirmation ({rep.passes}/{rep.trials})")
            return out
        if matches:
            out.status = "known"
            out.provenance = [m.name for m in matches]
        elif self.closure.derivable(nf):
            out.status = "confirmed"
            out.provenance = ["derived from: " + ", ".join(self._seed_names(cand.n))]
        else:
            out.status = "novel"
            out.flags.append("needs human review")
        return out

    def _seed_names(self, n: int) -> list[str]:
        names = [name for name, *_ in self.closure.seeds.get(n, [])]
        return names or (["every pentagon is inscribed in a conic"] if n == 5 else ["word identities"])


def screen_and_confirm(candidate: Candidate, config: SearchConfig, classifier: Classifier | None = None) -> list[CandidateTheorem]:
    """One CandidateTheorem per configured conclusion."""
    classifier = classifier or Classifier(config)
    _, res, deg = _screen_candidate((candidate, config))
    return [classifier.classify(candidate, c, res[c], deg[c]) for c in candidate.conclusions]


# --- the full run -------------------------------------------------------

@dataclass
class SearchReport:
    config: SearchConfig
    candidates: list[CandidateTheorem]
    totals: dict
    completeness: dict
    collision_check: dict

    @property
    def novel(self) -> list[CandidateTheorem]:
        return [c for c in self.candidates if c.status == "novel"]

    @property
    def complete(self) -> bool:
        return not self.completeness["missed"]

    def to_dict(self, include_screened: bool = False) -> dict:
        return {
            "config": self.config.to_dict(),
            "totals": self.totals,
            "completeness": self.completeness,
            "collision_check": self.collision_check,
            "novel": [c.statement.name for c in self.novel],
            "candidates": [c.to_dict() for c in self.candidates
                           if include_screened or c.status != "screened-out"],
        }


def _progress(msg: str, quiet: bool):
    if not quiet:
        print(msg, file=sys.stderr, flush=True)


def _screen_all(cands: list[Candidate], config: SearchConfig):
    jobs = [(c, config) for c in cands]
    if config.workers > 1:
        with ProcessPoolExecutor(config.workers) as ex:
            yield from ex.map(_screen_candidate, jobs, chunksize=16)
    else:
        yield from map(_screen_candidate, jobs)


def run_search(config: SearchConfig | None = None, quiet: bool = False, statements=None) -> SearchReport:
    config = config or SearchConfig()
    classifier = Classifier(config, statements)
    cands = list(enumerate_candidates(config))
    _progress(f"search: {len(cands)} candidates x {len(config.conclusions)} conclusions", quiet)
    records: list[CandidateTheorem] = []
    step = max(1, len(cands) // 20)
    for i, (cand, res, deg) in enumerate(_screen_all(cands, config)):
        for c in cand.conclusions:
            records.append(classifier.classify(cand, c, res[c], deg[c]))
        if (i + 1) % step == 0:
            _progress(f"search: screened {i + 1}/{len(cands)} (n={cand.n})", quiet)
    totals = {s: sum(r.status == s for r in records) for s in STATUSES}
    totals["candidates"] = len(cands)
    totals["records"] = len(records)
    report = SearchReport(
        config, records, totals,
        completeness(config, records, classifier.statements),
        collision_check(config),
    )
    _progress(f"search: done {totals}", quiet)
    return report


def statement_key(st: TheoremStatement) -> tuple | None:
    nf = normal_form(st.n, st.hypothesis, st.word, st.conclusion)
    return None if nf is None else (st.n, st.hypothesis, st.conclusion, nf[2])


def in_bounds(st: TheoremStatement, config: SearchConfig) -> bool:
    lo, hi = config.n_range
    if not lo <= st.n <= hi or st.hypothesis not in config.hypotheses or st.conclusion not in config.conclusions:
        return False
    key = statement_key(st)
    return any(normal_form(st.n, st.hypothesis, w, st.conclusion)[2] == key[3]
               for w in reduced_words(st.n, config.max_letter, config.max_word_length))


def completeness(config: SearchConfig, records: list[CandidateTheorem], statements=None) -> dict:
    """Every builtin holds-statement within bounds must come back as known."""
    found = set()
    for r in records:
        if r.status == "known":
            found.add(statement_key(r.statement))
    recovered, missed = [], []
    for st in statements if statements is not None else builtin_suite():
        if st.expected != "holds" or not in_bounds(st, config):
            continue
        (recovered if statement_key(st) in found else missed).append(st.name)
    return {"recovered": recovered, "missed": missed}


def collision_check(config: SearchConfig) -> dict:
    """Screen word pairs that share a key; their verdicts must agree.

    One pair per n (the first collision among words of length <= 3),
    rotating through hypotheses and conclusions.
    """
    lo, hi = config.n_range
    pairs = []
    combos = [(h, c) for h in config.hypotheses for c in config.conclusions]
    for i, n in enumerate(range(lo, hi + 1)):
        h, c = combos[i % len(combos)]
        if not _hypothesis_ok(h, n):
            continue
        first = {}
        for w in reduced_words(n, config.max_letter, min(config.max_word_length, 3)):
            k = normal_form(n, h, w, c)
            if k in first:
                pairs.append((n, h, c, first[k], w))
                break
            first[k] = w
    pairs = pairs[: config.collision_checks]
    mismatches = []
    checked = 0
    for n, h, c, a, b in pairs:
        ra, _ = screen(n, h, a, (c,), config.screen_trials, config.seed, config.screen_bound)
        rb, _ = screen(n, h, b, (c,), config.screen_trials, config.seed, config.screen_bound)
        va = [v for v, _ in ra[c]]
        vb = [v for v, _ in rb[c]]
        if None in va or None in vb:
            continue
        checked += 1
        if va != vb:
            mismatches.append(f"{n} {h} {a} vs {b}: {c}")
    return {
        "pairs": [f"{n} {h} {c}: {a} ~ {b}" for n, h, c, a, b in pairs],
        "checked": checked,
        "mismatches": mismatches,
    }


def pattern_word(n: int) -> Word:
    """The word 2(12)^(n-6) continuing T_2, T_212, T_21212 for n = 6, 7, 8."""
    return Word((2,) + (1, 2) * (n - 6))


def pattern_sweep(ns: Iterable[int] = range(13, 17), trials: int = 3, seed: int = 0,
                  bound: int = SCREEN_BOUND) -> dict[int, list]:
    """Screen the inscribed-equivalence pattern for larger n; returns verdicts per n."""
    out = {}
    for n in ns:
        res, _ = screen(n, "inscribed", pattern_word(n), ("equivalent-to-input",), trials, seed, bound)
        out[n] = [v for v, _ in res["equivalent-to-input"]]
    return out
