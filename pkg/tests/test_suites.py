import json

import pytest

from costrength_lab.functors import Universe, Writer, canonical
from costrength_lab.suites import REGISTRY, run_all, run_suite, select

IDS = ["act-coherence", "graded-maybe", "ex-2.6", "ex-2.7", "ex-2.8-1a", "ex-2.8-1b", "ex-2.8-1c", "ex-2.8-2a",
       "ex-2.8-2b", "ex-2.8-2c", "ex-2.8-3", "ex-2.8-4", "prop-uniqueness", "lemma-3", "thm-3", "cor-3-comonads",
       "cor-3-cofree", "optic-transformer", "stream-extraction", "stream-upto", "app-hom-adjunction",
       "app-doctrinal", "app-coproducts", "app-free-monad"]


def test_registry_ids():
    assert list(REGISTRY) == IDS


def test_correspondence_for_one_functor():
    res = run_suite("thm-3", {"F": [Writer(canonical(2))]})
    assert res.status == "pass"
    assert res.counts["copoints"] == 1 and res.counts["costrengths"] == 1


def test_maybe_has_no_costrength():
    assert run_suite("ex-2.8-1c").counts["costrengths"] == 0


def test_graded_maybe_marker():
    res = run_suite("graded-maybe")
    assert res.status == "pass" and "m*f" in res.counts["non_iso"]


def test_size_cap_gives_skipped():
    res = run_suite("app-doctrinal", max_size=10)
    assert res.status == "skipped" and "max_size=10" in res.reason


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("thm-99")


def test_select_patterns():
    assert select("thm-*") == ["thm-3"]
    assert select("ex-2.8-*") == [i for i in IDS if i.startswith("ex-2.8-")]


def test_run_all_is_deterministic():
    u = Universe.of_sizes((0, 1, 2))
    a, b = run_all("ex-2.8-1*", universe=u), run_all("ex-2.8-1*", universe=u)
    assert a.ok and a.to_json() == b.to_json()
    assert [r["suite"] for r in json.loads(a.to_json())["suites"]] == ["ex-2.8-1a", "ex-2.8-1b", "ex-2.8-1c"]
    assert "timing" in a.to_json(timing=True)


@pytest.mark.slow
@pytest.mark.parametrize("sid", IDS)
def test_every_suite_passes(sid):
    res = run_suite(sid)
    assert res.status == "pass", res.render()
