import pytest

from cotwist.errors import UnknownName
from cotwist.suites import THEOREM_IDS, suite, verify

from .conftest import FIELDS, FIELD_IDS

# frozen: the only (suite, instance) pairs expected to fail
EXPECTED_FAIL = {
    ("prop1.2", "harrison:C2-sign-bad"),
    ("prop1.2", "harrison:C2-degenerate"),
    ("prop1.2", "harrison:H4-twist-bad"),
    ("lemma1.4", "harrison:C2-sign-bad"),
    ("lemma1.4", "harrison:H4-twist-bad"),
    ("prop2.2", "harrison:C2-sign-bad"),
    ("prop2.2", "harrison:H4-twist-bad"),
    ("prop3.4", "harrison:C2-sign-bad"),
    ("prop3.4", "harrison:H4-twist-bad"),
    ("thm3.2", "harrison:C2-sign-bad"),
    ("thm3.2", "harrison:C2-degenerate"),
    ("thm3.2", "harrison:H4-twist-bad"),
}

CASES = [(t, i) for t in THEOREM_IDS for i in suite(t).INSTANCES]


@pytest.mark.parametrize("f", FIELDS, ids=FIELD_IDS)
@pytest.mark.parametrize("theorem,instance", CASES)
def test_verify_matrix(theorem, instance, f):
    rep = verify(theorem, instance, f)
    if (theorem, instance) in EXPECTED_FAIL:
        assert not rep.passed
        assert rep.failures()
    else:
        assert rep.passed, rep.to_text()


@pytest.mark.parametrize("theorem,instance",
                         sorted(p for p in EXPECTED_FAIL if "bad" in p[1]))
def test_corrupted_inputs_carry_witnesses(theorem, instance):
    rep = verify(theorem, instance)
    assert any(r.witness is not None for r in rep.failures())


def test_every_suite_has_a_passing_default():
    for t in THEOREM_IDS:
        assert verify(t).passed, t


def test_unknown_ids():
    with pytest.raises(UnknownName):
        verify("thm9.9")
    with pytest.raises(UnknownName):
        verify("prop1.2", "regular:nope")
