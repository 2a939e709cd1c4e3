import chowforge


def test_suite_names():
    names = chowforge.suite_names()
    assert "intersection" in names and "engine" in names


def test_run_report_schema():
    doc = chowforge.run("intersection", n_max=2)
    assert doc["schema"] == 1
    assert doc["summary"]["total"] == 1
    case = doc["cases"][0]
    assert case["verdict"] == "pass"
    for key in ("suite", "case_id", "params", "wall_ms", "gb", "witness", "seed"):
        assert key in case


def test_run_is_deterministic():
    a = chowforge.run(["steinberg", "gamma"])
    b = chowforge.run(["steinberg", "gamma"])
    strip = lambda d: [(c["case_id"], c["verdict"], c["witness"], c["seed"]) for c in d["cases"]]
    assert strip(a) == strip(b)


def test_envelope_is_enforced():
    try:
        chowforge.run("lulu", n_max=4)
    except ValueError:
        pass
    else:
        raise AssertionError("n_max = 4 accepted without force")


def test_named_ideals():
    for name in chowforge.named_ideal_examples():
        text = chowforge.export_named(name)
        assert chowforge.roundtrip(text) == text
    assert chowforge.named_dim("Afrak(2,1)") == 4


def test_algebra():
    assert chowforge.det(["x", "y"], "[[x, y],[y, x]]") == "x^2 - y^2"
    assert chowforge.contains(["x", "y"], ["x^2 - y", "x*y - 1"], "y^2 - x")
    assert not chowforge.contains(["x", "y"], ["x^2 - y", "x*y - 1"], "x")
    assert chowforge.dim(["x", "y", "z"], ["x*y", "x*z"]) == 2
    assert chowforge.groebner(["x"], ["x^2", "x^3 + x"]) == ["x"]
