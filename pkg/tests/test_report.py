import json

import jsonschema
import pytest

from asg import report

EXAMPLES = [
    [(5, 3, 1), (1, 5, 2), (8, 3, 5), (2, 1, 1), (2, 2, 1)],
    [(3, 0), (0, 3), (5, 2), (2, 5)],
    [(5, 2), (2, 2), (2, 1), (5, 3)],
    [(2, 0), (0, 2), (4, 1), (2, 3)],
    [(2, 1), (1, 5), (1, 1), (4, 5)],
    [(1, 5), (5, 1), (2, 2), (3, 3)],
    [(3, 0), (0, 3), (2, 1)],
    [(1, 2, 1), (2, 3, 1), (2, 1, 3), (2, 3, 2), (2, 2, 2), (3, 3, 3)],
    [(3,), (5,), (7,)],
    [(1, 0), (0, 1)],
]


@pytest.mark.parametrize("gens", EXAMPLES, ids=lambda g: ";".join(",".join(map(str, v)) for v in g))
def test_schema_and_round_trip(gens):
    r = report.analyze(gens)
    text = report.dumps(r)
    jsonschema.validate(json.loads(text), report.json_schema())
    assert report.loads(text) == r


def test_summary_values():
    r = report.analyze(EXAMPLES[0])
    assert len(r.apery_elements) == 91 and r.is_cm and len(r.conductor_generators) == 11
    r = report.analyze(EXAMPLES[1])
    assert r.typ == 3 and not r.is_cm
    assert r.conductor_generators == ((2, 8), (5, 5), (8, 2))
    r = report.analyze([(1, 0), (0, 1)])
    assert r.is_normal and r.typ == 1 and r.conductor_generators == ((0, 0),)
    assert r.frobenius_number is None
    assert report.analyze([(3,), (5,), (7,)]).frobenius_number == 4


def test_threads_do_not_change_output():
    one = report.dumps(report.analyze(EXAMPLES[0], report.Limits(threads=1)))
    four = report.dumps(report.analyze(EXAMPLES[0], report.Limits(threads=4)))
    assert one == four


def test_timings_are_opt_in():
    r = report.analyze(EXAMPLES[1], timings=True)
    assert "apery" in r.timings
    assert "timings" not in json.loads(report.dumps(report.analyze(EXAMPLES[1])))
    jsonschema.validate(json.loads(report.dumps(r)), report.json_schema())


def test_oracle_cross_check_and_notes():
    r = report.analyze([(4,), (6,)], report.Limits(box=30))
    assert r.oracle_check == {"bound": 30, "apery": True, "conductor": True}
    assert any("gcd 2" in n for n in r.notes)
    r = report.analyze([(3, 0), (0, 3), (5, 2), (2, 5), (8, 2)])
    assert r.removed_generators == ((8, 2),)
    r = report.analyze([(2, 0), (0, 2), (4, 1), (2, 3)])
    assert r.is_buchsbaum and any("Buchsbaum" in n for n in r.notes)


def test_text_rendering():
    text = report.render_text(report.analyze(EXAMPLES[1]))
    assert "conductor gens        {(2,8), (5,5), (8,2)}" in text
    assert "Cohen-Macaulay        no" in text


def test_unknown_schema_rejected():
    data = report.to_dict(report.analyze(EXAMPLES[1]))
    data["schema"] = "other/9"
    with pytest.raises(ValueError):
        report.from_dict(data)
