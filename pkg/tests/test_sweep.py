"""Tests for the sweep harness: subsemigroup enumeration, differential
runs, report determinism and serialization."""

import pytest

from resemi.sweep import (
    SweepPlan,
    SweepReport,
    enumerate_subsemigroups,
    run_sweep,
)

class TestEnumerateSubsemigroups:
    def test_singleton_base(self):
        subs = enumerate_subsemigroups("transformation", 1, ("exhaustive",))
        assert len(subs) == 1 and len(subs[0]) == 1

    def test_t2_exhaustive(self):
        subs = enumerate_subsemigroups("transformation", 2, ("exhaustive",))
        keys = [frozenset(e.to_text() for e in s.elements) for s in subs]
        assert len(keys) == len(set(keys))
        for expected in (
            {"0,1"},
            {"0,1", "1,0"},
            {"0,0"},
            {"0,0", "1,1"},
            {"0,0", "0,1", "1,0", "1,1"},
        ):
            assert frozenset(expected) in keys

    def test_linear_dim1_gf2(self):
        subs = enumerate_subsemigroups("linear", 1, ("exhaustive",), p=2)
        keys = {frozenset(e.to_text() for e in s.elements) for s in subs}
        assert keys == {frozenset({"0"}), frozenset({"1"}), frozenset({"0", "1"})}

    def test_intractable_request_refused(self):
        with pytest.raises(ValueError, match="intractable exhaustive request"):
            enumerate_subsemigroups("transformation", 3, ("exhaustive",))

    def test_seeded_deterministic_and_closed(self):
        a = enumerate_subsemigroups("transformation", 3, ("seeded", 25, "s1"))
        b = enumerate_subsemigroups("transformation", 3, ("seeded", 25, "s1"))
        c = enumerate_subsemigroups("transformation", 3, ("seeded", 25, "s2"))
        assert [s.key() for s in a] == [s.key() for s in b]
        assert [s.key() for s in a] != [s.key() for s in c]
        keys = [s.key() for s in a]
        assert len(keys) == len(set(keys))  # deduplicated


class TestRunSweep:
    def test_empty_plan(self):
        rep = run_sweep(SweepPlan(family="transformation", ns=()))
        assert rep.instances_run == 0 and rep.clean

    def test_small_transformation_sweep_is_clean(self):
        plan = SweepPlan(
            family="transformation", ns=(1, 2), subset_sizes=(1, 2),
            source=("exhaustive",), modes=("regular", "inverse", "unit_regular"),
        )
        rep = run_sweep(plan)
        assert rep.clean and rep.instances_run > 0
        assert rep.semigroup_agreements == rep.semigroup_checks
        assert rep.element_agreements == rep.element_checks
        assert rep.witnesses_checked > 0

    def test_small_linear_sweep_is_clean(self):
        plan = SweepPlan(
            family="linear", pns=((2, 1), (3, 1)), source=("exhaustive",),
            modes=("regular", "inverse", "unit_regular", "completely_regular"),
        )
        rep = run_sweep(plan)
        assert rep.clean and rep.instances_run > 0
        assert rep.definition_checks_run > 0

    def test_size_cap_recorded_not_fatal(self):
        plan = SweepPlan(
            family="transformation", ns=(3,), subset_sizes=(1,),
            source=("exhaustive",), modes=("regular",), size_cap=5,
        )
        rep = run_sweep(plan)
        assert rep.instances_run == 3
        assert len(rep.skipped) == 3  # every build needs 9 > 5 elements
        assert not rep.mismatches

    def test_element_cap_zero_disables_element_level(self):
        plan = SweepPlan(
            family="transformation", ns=(2,), subset_sizes=(1, 2),
            source=("exhaustive",), modes=("regular",), element_cap=0,
        )
        rep = run_sweep(plan)
        assert rep.element_checks.get("regular", 0) == 0
        assert rep.semigroup_checks["regular"] > 0

    def test_mode_validation(self):
        with pytest.raises(ValueError, match="not available"):
            SweepPlan(family="transformation", ns=(2,), modes=("completely_regular",))
        with pytest.raises(ValueError, match="unknown family"):
            SweepPlan(family="affine")


class TestDeterminismAndSerialization:
    def test_identical_plans_identical_reports(self):
        plan = SweepPlan(
            family="transformation", ns=(3,), subset_sizes=(3,),
            source=("seeded", 20, "det"), modes=("regular", "inverse", "unit_regular"),
        )
        first = run_sweep(plan).to_json(include_timing=False)
        second = run_sweep(plan).to_json(include_timing=False)
        assert first == second

    def test_timing_field_is_separate(self):
        plan = SweepPlan(family="transformation", ns=(2,), source=("exhaustive",))
        rep = run_sweep(plan)
        assert "wall_time_s" in rep.to_dict()
        assert "wall_time_s" not in rep.to_dict(include_timing=False)

    def test_plan_round_trip(self):
        plan = SweepPlan(
            family="linear", pns=((2, 2),), subset_sizes=(0, 1),
            source=("seeded", 5, "x"), modes=("regular",), element_cap=64,
        )
        assert SweepPlan.from_dict(plan.to_dict()) == plan

    def test_report_round_trip(self):
        plan = SweepPlan(family="transformation", ns=(2,), source=("exhaustive",))
        rep = run_sweep(plan)
        back = SweepReport.from_dict(rep.to_dict())
        assert back.to_json() == rep.to_json()
