import dataclasses
import json

import pytest

from projconf.polygons import Word
from projconf.search import (
    Candidate,
    Closure,
    SearchConfig,
    builtin_seeds,
    canonical_key,
    count_candidates,
    enumerate_candidates,
    normal_form,
    pattern_sweep,
    reduce_letters,
    reduced_words,
    run_search,
    screen_and_confirm,
    statement_key,
    word_classes,
)
from projconf.verifier import builtin_suite, check_statement, TheoremStatement

SMALL = SearchConfig(n_range=(5, 8), max_word_length=4)


def cand(n, hyp, word, conclusions=("equivalent-to-input", "inscribed", "circumscribed")):
    w = Word.parse(word) if isinstance(word, str) else Word(tuple(word))
    keys = tuple((c, normal_form(n, hyp, w, c)[2]) for c in conclusions)
    return Candidate(n, hyp, w, keys)


def test_reduction():
    assert reduce_letters((1, 1, 2), 7) == (2,)
    assert reduce_letters((6, 2), 7) == (1, 2)
    assert reduce_letters((2, 5), 7) == ()


def test_keys_merge_unit_images():
    assert canonical_key(12, (1, 3, 1, 3, 1, 3)) == canonical_key(12, (5, 3, 5, 3, 5, 3))
    assert canonical_key(6, (2,)) == canonical_key(6, (4,))
    assert canonical_key(7, (2, 1)) == canonical_key(7, (1, 2))


def test_circumscribed_keys_not_merged_by_units():
    # inscribed-to-circumscribed under T_313 vs its unit image T_131 (n=10, u=3)
    a = normal_form(10, "inscribed", (3, 1, 3), "circumscribed")
    b = normal_form(10, "inscribed", (1, 3, 1), "circumscribed")
    assert a != b


@pytest.mark.parametrize("n,words,classes", [
    (5, 14, 7), (6, 14, 11), (7, 381, 71), (8, 381, 114),
    (9, 4372, 756), (10, 4372, 1146), (11, 4372, 1861), (12, 4372, 2266),
])
def test_enumeration_counts(n, words, classes):
    assert len(list(reduced_words(n, 4, 7))) == words
    assert len(word_classes(n, 4, 7)) == classes


def test_half_letter_skipped():
    assert all(4 not in w.letters for w in reduced_words(8, 4, 3))


def test_default_candidate_count():
    assert count_candidates(SearchConfig()) == 27701
    assert count_candidates(SMALL) == 152


def test_enumeration_deterministic():
    assert list(enumerate_candidates(SMALL)) == list(enumerate_candidates(SMALL))


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(n_range=(8, 5))
    with pytest.raises(ValueError):
        SearchConfig(conclusions=("blue",))


def test_known_hexagon():
    (rec,) = screen_and_confirm(cand(6, "inscribed", "2", ("equivalent-to-input",)), SearchConfig())
    assert rec.status == "known"
    assert "inscribed-6-T2-equivalent" in rec.provenance


def test_negative_control_screened_out():
    (rec,) = screen_and_confirm(cand(9, "inscribed", "2121212", ("equivalent-to-input",)), SearchConfig())
    assert rec.status == "screened-out"


def test_starred_statement_known_and_flagged():
    (rec,) = screen_and_confirm(cand(12, "inscribed", "31313", ("circumscribed",)), SearchConfig())
    assert rec.status == "known"
    assert rec.statement.starred
    assert "unproven in paper" in rec.report["flags"]


def test_unit_image_is_known():
    (rec,) = screen_and_confirm(cand(12, "inscribed", "535353", ("inscribed",)), SearchConfig())
    assert rec.status == "known"


def test_builtin_keys_collide_only_for_unit_images():
    keys = {}
    for s in builtin_suite():
        k = statement_key(s)
        if k is not None:
            keys.setdefault(k, []).append(s.name)
    shared = [names for names in keys.values() if len(names) > 1]
    assert shared == [["inscribed-12-T131313-inscribed", "inscribed-12-T535353-inscribed"]]


def test_closure_sound_on_samples():
    # every derivable statement of small length must verify
    cl = Closure(builtin_seeds(), cap=4)
    found = 0
    for n in (6, 8):
        for w in reduced_words(n, 3, 3):
            for c in ("equivalent-to-input", "inscribed", "circumscribed"):
                nf = normal_form(n, "inscribed", w, c)
                if nf and cl.derivable(nf):
                    found += 1
                    st = TheoremStatement("d", n, "inscribed", str(w), c)
                    assert check_statement(st, trials=3, seed=5).passes == 3, (n, w, c)
    assert found > 5


def test_small_search_complete_and_deterministic():
    a = run_search(SMALL, quiet=True)
    b = run_search(dataclasses.replace(SMALL, workers=2), quiet=True)
    assert a.complete
    assert a.novel == []
    assert a.collision_check["mismatches"] == []
    assert json.dumps(a.to_dict(True)) == json.dumps(b.to_dict(True))
    assert a.totals == {"screened-out": 234, "confirmed": 65, "known": 3, "novel": 0,
                        "candidates": 152, "records": 302}


def test_pattern_fails_beyond_twelve():
    sweep = pattern_sweep(range(13, 15), trials=2)
    assert all(v is False for vs in sweep.values() for v in vs)
