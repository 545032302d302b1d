import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catacool import (
    DiagonalState,
    InconsistentCertificateError,
    InvalidInputError,
    JointState,
    NotSynthesizableError,
    build_plan,
    check_cnu1,
    check_cnu1_general,
    diagram_export,
    diagram_to_csv,
    execute_plan,
    ground_subspace_plan,
    serialize_plan,
    synthesize_catalyst,
)
from catacool.oracles import cnu1_exists_bruteforce


def sorted_state(values):
    arr = np.sort(np.asarray(values, dtype=float))[::-1]
    return DiagonalState(tuple(arr / arr.sum()))


probs2 = st.lists(st.floats(min_value=0.05, max_value=1.0), min_size=2, max_size=2)
probs_v = st.lists(st.floats(min_value=0.05, max_value=1.0), min_size=2, max_size=3)


class TestCheckCnu1:
    def test_hot_only_worked_example(self):
        cert = check_cnu1(
            DiagonalState((0.6, 0.4)),
            DiagonalState((0.6, 0.4)),
            DiagonalState((0.55, 0.45)),
        )
        assert cert is not None
        assert cert.chain_kind == "hot-only"
        assert (cert.i, cert.l, cert.lp) == (1, 1, 1)
        assert cert.loop_current == pytest.approx(0.024)

    def test_chain_free_for_non_passive_pair(self):
        cert = check_cnu1(
            DiagonalState((0.5, 0.5)),
            DiagonalState((0.7, 0.3)),
            DiagonalState((0.6, 0.4)),
        )
        assert cert is not None
        assert cert.chain_kind == "none"
        assert cert.lp == cert.l - 1
        assert cert.loop_current == pytest.approx(0.6 * (0.35 - 0.15))

    def test_no_loop_when_fully_mixed_everything(self):
        cert = check_cnu1(
            DiagonalState((0.5, 0.5)),
            DiagonalState((0.5, 0.5)),
            DiagonalState((0.5, 0.5)),
        )
        assert cert is None

    def test_mixed_catalyst_cannot_help_passive_pair(self):
        # Identical cold/hot qubits are jointly passive; a fully mixed
        # catalyst adds nothing.
        cert = check_cnu1(
            DiagonalState((0.6, 0.4)),
            DiagonalState((0.6, 0.4)),
            DiagonalState((0.5, 0.5)),
        )
        assert cert is None

    def test_needs_rank_two_catalyst(self):
        with pytest.raises(InvalidInputError):
            check_cnu1(
                DiagonalState((0.6, 0.4)),
                DiagonalState((0.6, 0.4)),
                DiagonalState((1.0,)),
            )

    def test_general_variant_boundary_is_negative(self):
        cert = check_cnu1_general(
            DiagonalState((0.5, 0.3, 0.2)), DiagonalState((0.7, 0.3))
        )
        assert cert is None

    def test_general_variant_positive(self):
        # Mild catalyst slope: cooling 2->1 restored by a right chain into
        # level 3 (both the chain and the cooling inequality leave room).
        cert = check_cnu1_general(
            DiagonalState((0.4, 0.35, 0.25)), DiagonalState((0.542, 0.458))
        )
        assert cert is not None
        assert cert.chain_kind == "right"
        assert cert.i == 1

    @given(probs2, probs2, probs_v)
    @settings(max_examples=150, deadline=None)
    def test_matches_bruteforce_oracle(self, cold, hot, cat):
        pc, ph, pv = sorted_state(cold), sorted_state(hot), sorted_state(cat)
        fast = check_cnu1(pc, ph, pv) is not None
        slow = cnu1_exists_bruteforce(pc.probs, ph.probs, pv.probs)
        assert fast == slow


class TestPlans:
    def test_execute_worked_example(self):
        pc = DiagonalState((0.6, 0.4))
        ph = DiagonalState((0.6, 0.4))
        pv = DiagonalState((0.55, 0.45))
        cert = check_cnu1(pc, ph, pv)
        plan = build_plan(pc, ph, pv, cert)
        state = JointState.from_product(pc, ph, pv)
        after, report = execute_plan(state, plan)
        assert report.catalyst_max_deviation <= 1e-10
        assert report.violated_prefix == 1
        assert report.prefix_delta == pytest.approx(0.024)
        assert after.marginal(0)[0] == pytest.approx(0.624)

    def test_hot_only_plan_groups_parallel_rotations(self):
        pc = DiagonalState((0.6, 0.4))
        ph = DiagonalState((0.6, 0.4))
        pv = DiagonalState((0.55, 0.45))
        plan = build_plan(pc, ph, pv, check_cnu1(pc, ph, pv))
        kinds = [r.kind for r in plan.rotations]
        assert kinds == ["cooling", "restoring"]
        assert len(plan.rotations[1].pairs) == 2  # one per cold level
        text = serialize_plan(plan)
        assert "*c" in text  # collapsed cold axis in the factored rotation

    def test_inconsistent_certificate_rejected(self):
        pc = DiagonalState((0.6, 0.4))
        ph = DiagonalState((0.6, 0.4))
        cert = check_cnu1(pc, ph, DiagonalState((0.55, 0.45)))
        with pytest.raises(InconsistentCertificateError):
            build_plan(pc, ph, DiagonalState((0.5, 0.5)), cert)

    def test_plan_reports_energy_and_ground_deltas(self):
        from catacool import EnergyLevels

        pc = DiagonalState((0.6, 0.4))
        ph = DiagonalState((0.6, 0.4))
        pv = DiagonalState((0.55, 0.45))
        plan = build_plan(pc, ph, pv, check_cnu1(pc, ph, pv))
        state = JointState.from_product(pc, ph, pv)
        _, report = execute_plan(
            state, plan, cold_energies=EnergyLevels((0.0, 1.0)), ground_degeneracy=1
        )
        assert report.delta_mean_energy == pytest.approx(-0.024)
        assert report.delta_ground_population == pytest.approx(0.024)


class TestSynthesize:
    def test_worked_example_runs_catalytically(self):
        pc = DiagonalState((0.6, 0.4))
        ph = DiagonalState((0.5, 0.3, 0.2))
        pv, cert = synthesize_catalyst(pc, ph)
        plan = build_plan(pc, ph, pv, cert)
        state = JointState.from_product(pc, ph, pv)
        _, report = execute_plan(state, plan)
        assert report.catalyst_max_deviation <= 1e-10
        assert report.violated_prefix is not None

    def test_passive_pair_gets_catalyst(self):
        # Jointly passive identical qubits: no hot-only cooling, yet a
        # catalyst of geometric spectrum enables a loop.
        pc = DiagonalState((0.6, 0.4))
        ph = DiagonalState((0.6, 0.4))
        pv, cert = synthesize_catalyst(pc, ph)
        assert cert.loop_current > 0
        assert check_cnu1(pc, ph, pv) is not None

    def test_unsynthesizable_fully_mixed(self):
        with pytest.raises(NotSynthesizableError):
            synthesize_catalyst(DiagonalState((0.5, 0.5)), DiagonalState((0.5, 0.5)))

    def test_ground_subspace_plan(self):
        pc = DiagonalState((0.4, 0.35, 0.25))
        pv, plan = ground_subspace_plan(pc, g=1)
        state = JointState.from_product(pc, pv)
        after, report = execute_plan(state, plan, ground_degeneracy=1)
        assert report.catalyst_max_deviation <= 1e-10
        assert report.delta_ground_population > 0
        assert after.marginal(0)[0] > 0.4

    def test_ground_subspace_needs_interior_g(self):
        pc = DiagonalState((0.4, 0.35, 0.25))
        with pytest.raises(InvalidInputError):
            ground_subspace_plan(pc, g=2)


class TestDiagram:
    def test_sections_and_sorting(self):
        pc = DiagonalState((0.6, 0.4))
        ph = DiagonalState((0.6, 0.4))
        pv = DiagonalState((0.55, 0.45))
        plan = build_plan(pc, ph, pv, check_cnu1(pc, ph, pv))
        data = diagram_export(pc, ph, pv, plan)
        values = [v for _, v in data.columns]
        assert values == sorted(values, reverse=True)
        assert len(data.rows) == 2
        assert data.arrows[0][0] == "cooling"
        text = diagram_to_csv(data)
        for section in ("columns", "rows", "arrows"):
            assert f"\n{section}\n" in text or text.startswith(f"{section}\n")

    def test_no_plan_no_arrows(self):
        data = diagram_export(
            DiagonalState((0.6, 0.4)),
            DiagonalState((0.6, 0.4)),
            DiagonalState((0.55, 0.45)),
        )
        assert data.arrows == ()


class TestCatalysisProperty:
    @given(probs2, probs2, probs_v)
    @settings(max_examples=100, deadline=None)
    def test_every_certified_plan_is_catalytic_and_non_unital(self, cold, hot, cat):
        pc, ph, pv = sorted_state(cold), sorted_state(hot), sorted_state(cat)
        cert = check_cnu1(pc, ph, pv)
        if cert is None:
            return
        plan = build_plan(pc, ph, pv, cert)
        state = JointState.from_product(pc, ph, pv)
        _, report = execute_plan(state, plan)
        assert report.catalyst_max_deviation <= 1e-10
        assert report.prefix_delta >= 1e-12
