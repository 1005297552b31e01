import pytest

from shuffle_quadri import (Combination, InstanceSpec, SpecDomainError, check_law,
                            run_suite, se, sweedler_sum, wedge, word_of_string)
from shuffle_quadri.laws import (CATALOG, GROUPS, LAWS, evaluate_equation, expand_names,
                                 instances)
from shuffle_quadri.quadri import NE, SE, UNIT_TABLE, quadri

SMALL = InstanceSpec(2, 4)


def W(text):
    return Combination.word(word_of_string(text))


def test_catalog_names_are_unique_and_grouped():
    assert len(LAWS) == len(CATALOG)
    for members in GROUPS.values():
        assert all(m in LAWS for m in members)
    assert len(GROUPS["quadri_axiom_matrix"]) == 9
    assert len(GROUPS["thm_main"]) == 4


def test_axiom_group_passes():
    report = check_law("quadri_axiom_matrix", InstanceSpec(2, 5, arity=3))
    assert report.passed and report.counterexample is None
    assert report.instances_checked > 0


def test_thm_main_example_instance():
    a, b, c = (word_of_string(x) for x in "abc")
    lhs = quadri(NE, a, b + c)
    rhs = sweedler_sum(se, wedge, a, b, c)
    assert lhs == rhs == W("bca")
    assert check_law("thm_main_1", InstanceSpec(2, 5)).passed


def test_negative_law_finds_witness():
    report = check_law("shuffle_module_algebra_negative", InstanceSpec(3, 3))
    assert report.passed
    assert report.counterexample is None
    assert report.witness is not None
    lhs, rhs = evaluate_equation("shuffle_module_algebra_negative", report.witness.inputs)
    assert lhs != rhs


def test_negative_law_fails_without_room():
    # three nonempty words need total length at least 3
    spec = InstanceSpec(2, 2, allow_unit_slots=(False, False, False))
    report = check_law("shuffle_module_algebra_negative", spec)
    assert not report.passed
    assert report.witness is None


def test_run_suite_single_letter():
    reports = run_suite(InstanceSpec(1, 4))
    assert [r.law for r in reports] == [law.name for law in CATALOG]
    assert all(r.passed for r in reports), [r.law for r in reports if not r.passed]


def test_run_suite_is_deterministic():
    one = [r.to_json() for r in run_suite(SMALL)]
    two = [r.to_json() for r in run_suite(SMALL)]
    for r in one + two:
        r.pop("ms")
    assert one == two


def test_parallel_matches_serial():
    names = ["thm_main", "cor_one"]
    serial = [r.to_json() for r in run_suite(SMALL, names)]
    parallel = [r.to_json() for r in run_suite(SMALL, names, jobs=2)]
    for r in serial + parallel:
        r.pop("ms")
    assert serial == parallel


def test_degenerate_specs():
    with pytest.raises(SpecDomainError):
        InstanceSpec(2, 0)
    with pytest.raises(SpecDomainError):
        InstanceSpec(0, 3)
    with pytest.raises(SpecDomainError):
        check_law("no_such_law", SMALL)


def test_unit_slot_request_cannot_widen_domain():
    spec = InstanceSpec(2, 3, allow_unit_slots=(True, True, True))
    with pytest.raises(SpecDomainError):
        list(instances(LAWS["thm_main_1"], spec))


def test_enumeration_order():
    law = LAWS["quadri_commutativity"]
    got = list(instances(law, InstanceSpec(2, 2)))
    lengths = [sum(map(len, t)) for t in got]
    assert lengths == sorted(lengths)
    assert ((), ()) not in got
    assert got[0] in {((), (0,)), ((0,), ())}


def test_skipped_unit_triples_are_counted():
    report = check_law("quadri_axiom_11", InstanceSpec(2, 3))
    assert report.passed and report.skipped > 0


def test_group_names_expand():
    assert expand_names(["thm_main", "thm_main_1"]) == GROUPS["thm_main"]


def test_report_json_shape():
    data = check_law("thm_main_1", SMALL).to_json()
    assert {"law", "instances", "passed", "counterexample", "ms"} <= set(data)
    assert data["counterexample"] is None


def test_worked_example_notes_printed_discrepancies():
    report = check_law("paper_example", SMALL)
    assert report.passed
    joined = " ".join(report.notes)
    assert "extra 1*u1u2v1v2w" in joined
    assert "missing 1*v1u1u2v2w" in joined


@pytest.fixture
def corrupted_unit_table():
    saved = dict(UNIT_TABLE)
    UNIT_TABLE[(SE, "left")] = False
    yield
    UNIT_TABLE.update(saved)


def test_counterexample_is_sound(corrupted_unit_table):
    report = check_law("thm_main", SMALL)
    assert not report.passed
    cx = report.counterexample
    assert cx.lhs != cx.rhs
    member = next(line for line in report.notes if line.startswith("first failing member"))
    lhs, rhs = evaluate_equation(member.split(": ")[1], cx.inputs, cx.equation)
    assert (lhs, rhs) == (cx.lhs, cx.rhs)
    assert "counterexample" in report.to_json() and report.to_json()["counterexample"]
