from skewalg.worked_example import verify
from skewalg.report import RunReport


def test_worked_example_all_claims_pass():
    rep = verify()
    failed = [c.id for c in rep.claims if not c.passed]
    assert not failed
    assert {"skew.basic", "section.objects", "hprime.ar", "tilting.FT.endo", "nu_mu.multiplicative"} <= {
        c.id for c in rep.claims}


def test_report_timing_is_optional():
    rep = RunReport("x")
    with rep.timed("step"):
        pass
    rep.claim("one", "trivially true", True, value=1)
    assert "timing_seconds" not in rep.to_dict()
    assert "step" in rep.to_dict(with_timing=True)["timing_seconds"]
    assert rep.passed and rep.to_dict()["claims"][0]["witness"] == {"value": 1}
