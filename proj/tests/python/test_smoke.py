import pfe


def test_rational_helpers():
    assert pfe.rational("3/6") == "1/2"
    assert pfe.falling_factorial("5", 3) == "60"
    assert pfe.falling_factorial("1/2", 2) == "-1/4"
    assert pfe.degenerate_falling_factorial("2", 2, "1/2") == "3"


def test_parse_poly():
    assert pfe.parse_poly("x^4 - 3*x + 1") == ["1", "-3", "0", "0", "1"]
    assert pfe.parse_poly("(x-1)*(x+1)") == ["-1", "0", "1"]


def test_stirling_tables():
    rows = pfe.stirling_rows("s2", 4)
    assert rows[4][2] == "7"
    t = pfe.stirling_table("s1y", 3, model=pfe.MomentModel.exponential("1"))
    assert t.value(2, 1) == "-2"


def test_moment_models():
    m = pfe.MomentModel.poisson("1")
    assert m.raw_moment(3) == "5"
    assert pfe.MomentModel.geometric("1/2").raw_moment(1) == "2"
    assert pfe.MomentModel.exponential("2").raw_moment(3) == "3/4"


def test_family_constants():
    polys = pfe.family("1/2", 3)
    constants = [p[0] for p in polys]
    assert constants == ["1", "-2", "6", "-26"]


def test_expand_roundtrip():
    out = pfe.expand("x", "1/2", theorem=31, verify=True)
    assert out["coefficients"] == ["2", "1"]
    assert out["reconstruction_ok"] is True

    out = pfe.expand("x^2 - 1/3", "-1", lambda_="1/4", order=2, theorem=4,
                     formula=2, verify=True,
                     model=pfe.MomentModel.poisson("2"))
    assert out["reconstruction_ok"] is True


def test_closed_forms():
    m = pfe.MomentModel.exponential("5/2")
    assert pfe.closed_falling(m, "1/2", "0", 1) == ["2", "5/2"]


def test_verify_suite():
    out = pfe.verify_suite("orthogonality", 6)
    assert out["ok"] is True
    assert all(passed for _, passed in out["lines"])
