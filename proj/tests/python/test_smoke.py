import pytest

import symx


def test_apply_relabels_generators():
    assert symx.apply("(perm (0 1) (1 0))", "(gen n:0)") == "(gen n:1)"


def test_support_lists_points():
    assert symx.support("(bullet (gen n:0) (gen n:1))") == ["n:0", "n:1"]


def test_forces_generic_membership():
    assert symx.forces("(cond ((n:0 0) 1))", "(elem (check 0) (gen n:0))")
    assert not symx.forces("(cond)", "(elem (check 0) (gen n:0))")


def test_compile_is_raw():
    assert symx.compile("(check 1)", index_size=1, slots=1).startswith("(raw")


def test_product_based_worked_example():
    f6 = symx.product_based(
        "(based (bound 2) (top 1) (pt q:1 0))",
        "(based (bound 3) (top 2) (pt q:0 1) (pt q:5 0))",
        2,
        3,
    )
    assert f6 == "(based (bound 6) (top 5) (pt q:0 4) (pt q:1 1) (pt q:5 0))"


def test_run_suite_reports():
    r = symx.run_suite("tenacity")
    assert r["pass"] and r["checked"] > 0
    assert "tenacity" in symx.suite_names


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        symx.support("(bullet (gen")
