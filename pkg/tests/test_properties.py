"""Smoke slice of the randomized property suite (the full 500-instance run
is acceptance criterion 8 in test_acceptance.py)."""

from property_suite import run_property_suite


def test_property_suite_smoke():
    assert run_property_suite(total=60, seed=77) >= 60
