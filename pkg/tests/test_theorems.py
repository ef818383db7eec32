"""Registry integrity and the proposition runner."""

import json
from importlib import resources

import pytest

from hyperrings.corpus import ordinary_ring, zn_with_products
from hyperrings.construct import direct_product
from hyperrings.theorems import (
    COUNTEREXAMPLE,
    HOLDS,
    NOT_APPLICABLE,
    READING_AXES,
    REGISTRY,
    REGISTRY_BY_ID,
    Reading,
    reading_from_flags,
    run_suite,
    run_theorem,
)


class TestRegistryAudit:
    def test_ids_match_checked_in_manifest(self):
        manifest = json.loads(
            resources.files("hyperrings.data")
            .joinpath("registry_manifest.json").read_text())
        assert [e.tid for e in REGISTRY] == manifest["entries"]
        assert len(REGISTRY) == manifest["count"]

    def test_entries_unique_with_statements(self):
        ids = [e.tid for e in REGISTRY]
        assert len(set(ids)) == len(ids)
        for e in REGISTRY:
            assert e.statement.strip()

    def test_axes_are_known(self):
        for e in REGISTRY:
            for axis in e.axes:
                assert axis in READING_AXES

    def test_default_reading_is_first_option(self):
        rd = Reading()
        for axis, options in READING_AXES.items():
            assert getattr(rd, axis) == options[0]

    def test_reading_from_flags_validates(self):
        assert reading_from_flags({"regular": "vnr"}).regular == "vnr"
        with pytest.raises(ValueError):
            reading_from_flags({"regular": "bogus"})
        with pytest.raises(ValueError):
            reading_from_flags({"bogus": "nzd"})


class TestSingleVerdicts:
    def test_t20_on_z4(self, z4):
        v = run_theorem(REGISTRY_BY_ID["T20"], z4)
        assert v.status == HOLDS

    def test_t33_on_z13_a_set(self, z13a):
        v = run_theorem(REGISTRY_BY_ID["T33"], z13a)
        assert v.status == HOLDS

    def test_cap_guard_yields_not_applicable(self):
        ring = ordinary_ring(17)
        v = run_theorem(REGISTRY_BY_ID["T04"], ring, explore_readings=False)
        assert v.status == NOT_APPLICABLE
        assert "cap" in v.witness["reason"]

    def test_identityless_ring_not_applicable(self):
        ring = zn_with_products(6, (2, 3))
        assert ring.identity is None
        v = run_theorem(REGISTRY_BY_ID["T18"], ring, explore_readings=False)
        assert v.status == NOT_APPLICABLE
        assert v.witness["reason"] == "no identity"

    def test_standing_gate_and_waiver(self):
        ring = zn_with_products(4, (2, 3))  # has a non-C hyperideal
        v = run_theorem(REGISTRY_BY_ID["T29"], ring, explore_readings=False)
        assert v.status == NOT_APPLICABLE
        waived = run_theorem(REGISTRY_BY_ID["T29"], ring,
                             reading=Reading(standing="waived"),
                             explore_readings=False)
        assert waived.status == COUNTEREXAMPLE
        assert waived.reverified
        assert waived.witness["ideal"] == [0]

    def test_reading_sensitivity_reported(self, z2):
        # the literal extra-regular clause breaks complement duality on Z2
        v = run_theorem(REGISTRY_BY_ID["T16"], z2)
        assert v.status == HOLDS
        assert v.reading_sensitive
        assert any(status == COUNTEREXAMPLE
                   for status in v.reading_results.values())

    def test_t37_matrix_cap(self):
        v = run_theorem(REGISTRY_BY_ID["T37"], ordinary_ring(9),
                        explore_readings=False)
        assert v.status == NOT_APPLICABLE
        assert "matrix cap" in v.witness["reason"]
        v2 = run_theorem(REGISTRY_BY_ID["T37"], ordinary_ring(2),
                         explore_readings=False)
        assert v2.status == HOLDS

    def test_t39_needs_product_provenance(self, z4, z2):
        v = run_theorem(REGISTRY_BY_ID["T39"], z4, explore_readings=False)
        assert v.status == NOT_APPLICABLE
        prod = direct_product(z2, z4)
        v2 = run_theorem(REGISTRY_BY_ID["T39"], prod, explore_readings=False)
        assert v2.status == HOLDS

    def test_t40_gamma_cap(self, z12, z4):
        v = run_theorem(REGISTRY_BY_ID["T40"], z12, explore_readings=False)
        assert v.status == NOT_APPLICABLE
        v2 = run_theorem(REGISTRY_BY_ID["T40"], z4, explore_readings=False)
        assert v2.status == HOLDS

    def test_t35_mod2_reduction(self, z4, z2):
        report = run_suite([z4, z2], only={"T35"}, explore_readings=False)
        assert all(v.status == HOLDS for v in report.verdicts)


class TestCoverMachinery:
    def test_irredundant_covers_found_on_klein_zero_ring(self):
        # zero multiplication over the Klein four-group: every subgroup is
        # a hyperideal and the three two-element subgroups cover the ring
        # irredundantly (the smallest structure where ideal covers exist)
        from hyperrings.core import validate_hyperring
        from hyperrings.theorems import RingContext, _irredundant_covers

        add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
        hmul = [[[0]] * 4 for _ in range(4)]
        ring = validate_hyperring("klein-zero", add, hmul)
        assert ring.identity is None
        ctx = RingContext(ring)
        ideals = ctx.ideals()
        assert len(ideals) == 5
        covers = list(_irredundant_covers(ctx, ring.carrier_mask, ideals))
        assert [sorted(map(elements_of_sorted, c)) for c in covers] == \
            [[[0, 1], [0, 2], [0, 3]]]


def elements_of_sorted(mask):
    from hyperrings.bitsets import elements_of
    return elements_of(mask)


class TestSuite:
    def test_empty_corpus(self):
        report = run_suite([])
        assert report.verdicts == []
        assert report.exit_status() == 0

    def test_filter_contract(self, z4, z6):
        report = run_suite([z4, z6], only={"T18"}, explore_readings=False)
        assert {v.theorem for v in report.verdicts} == {"T18"}
        assert {v.ring for v in report.verdicts} == {"Z4", "Z6"}

    def test_verdicts_are_reproducible(self, z6a):
        a = run_suite([z6a], explore_readings=False)
        b = run_suite([z6a], explore_readings=False)
        assert a.to_json_bytes() == b.to_json_bytes()

    def test_timings_excluded_by_default(self, z2):
        report = run_suite([z2], only={"T18"}, explore_readings=False)
        obj = report.to_obj()
        assert "wall_ms" not in obj["verdicts"][0]
        timed = report.to_obj(include_timings=True)
        assert "wall_ms" in timed["verdicts"][0]

    def test_fail_fast_stops_early(self):
        ring = zn_with_products(4, (2, 3))
        report = run_suite([ring], reading=Reading(standing="waived"),
                           explore_readings=False, fail_fast=True)
        assert report.counterexamples
        assert report.exit_status() == 1
        assert report.verdicts[-1].status == COUNTEREXAMPLE
