import itertools

import pytest

from fincat.builders import NamedFiniteSet, build_finset
from fincat.errors import BoundExceeded
from fincat.nno import (
    BoundedNaturalSystem,
    RecursionData,
    check_mediation,
    dedekind_prefix_check,
    nno_search,
    numeral,
    primrec_eval,
)

Z3 = RecursionData(
    NamedFiniteSet("Z3", ("0", "1", "2")), "0", {"0": "1", "1": "2", "2": "0"}
)
SWAP = RecursionData(NamedFiniteSet("Bit", ("0", "1")), "0", {"0": "1", "1": "0"})


class TestNumerals:
    def test_zero_is_z(self):
        assert numeral(BoundedNaturalSystem.standard(3), 0) == "z"

    def test_two_is_a_double_successor(self):
        assert numeral(BoundedNaturalSystem.standard(3), 2) == "s ∘ s ∘ z"

    def test_beyond_the_bound_is_rejected(self):
        sys = BoundedNaturalSystem.standard(3)
        with pytest.raises(BoundExceeded):
            numeral(sys, 4)
        with pytest.raises(BoundExceeded):
            numeral(sys, -1)


class TestPrimitiveRecursion:
    def test_zero_iterations_give_the_start(self):
        assert primrec_eval(Z3, 0) == "0"

    def test_swap_three_times(self):
        assert primrec_eval(SWAP, 3) == "1"

    def test_mod_three_counting(self):
        assert primrec_eval(Z3, 5) == "2"

    def test_recursion_square_unrolled(self):
        for data in (Z3, SWAP):
            for n in range(50):
                assert primrec_eval(data, n + 1) == data.step[primrec_eval(data, n)]


class TestMediation:
    def trace(self, data, up_to):
        return {n: primrec_eval(data, n) for n in range(up_to + 1)}

    def test_iteration_trace_passes(self):
        report = check_mediation(Z3, self.trace(Z3, 6), 6)
        assert report.equations_hold
        assert report.witness is None

    def test_perturbed_value_fails_with_its_index(self):
        h = self.trace(Z3, 6)
        h[3] = "1"  # trace runs 0,1,2,0,... so index 3 must be "0"
        report = check_mediation(Z3, h, 6)
        assert not report.equations_hold
        assert report.witness == 3

    def test_zero_prefix_checks_only_the_base(self):
        report = check_mediation(Z3, {0: "0"}, 0)
        assert report.equations_hold
        report = check_mediation(Z3, {0: "2"}, 0)
        assert report.witness == 0

    def test_uniqueness_on_the_bounded_prefix(self):
        # every total h on 0..k either matches the iteration trace or fails
        for data in (Z3, SWAP):
            k = 4
            expected = self.trace(data, k)
            carrier = data.carrier.elements
            passing = []
            for values in itertools.product(carrier, repeat=k + 1):
                h = dict(enumerate(values))
                if check_mediation(data, h, k).equations_hold:
                    passing.append(h)
            assert passing == [expected]


class TestNnoSearch:
    def test_one_object_finset_admits_the_trivial_triple(self):
        fs = build_finset([NamedFiniteSet("One", ("*",))])
        result = nno_search(fs.category)
        ident = fs.identity("One")
        assert result.triples == (("One", ident, ident),)
        assert result.note is None

    def test_two_element_set_refutes_every_candidate(self):
        fs = build_finset(
            [NamedFiniteSet("One", ("*",)), NamedFiniteSet("Two", ("0", "1"))]
        )
        result = nno_search(fs.category)
        assert result.triples == ()

    def test_specific_refutation_witness(self):
        # (N=Two, z = *->0, s = swap) fails against (A=Two, c = *->0, f = const 1):
        # any mediating h must send 0 to 0 and then 1 = f(h(0)) = h(s(0)) = h(1),
        # forcing h = id, but then h(s(1)) = h(0) = 0 while f(h(1)) = 1.
        fs = build_finset(
            [NamedFiniteSet("One", ("*",)), NamedFiniteSet("Two", ("0", "1"))]
        )
        C = fs.category
        z = "One->Two{*:0}"
        s = "Two->Two{0:1,1:0}"
        c = "One->Two{*:0}"
        f = "Two->Two{0:1,1:1}"
        mediating = [
            h
            for h in C.hom("Two", "Two")
            if C.compose(h, z) == c and C.compose(h, s) == C.compose(f, h)
        ]
        assert mediating == []

    def test_category_without_terminal_reports_a_note(self):
        from fincat.builders import poset_as_category
        from fincat.galois import FinitePoset

        C = poset_as_category(FinitePoset.antichain(["a", "b"]))
        result = nno_search(C)
        assert result.triples == ()
        assert result.note == "no terminal object"

    def test_search_is_stable_under_relabelling(self):
        fs = build_finset(
            [NamedFiniteSet("One", ("*",)), NamedFiniteSet("Two", ("0", "1"))]
        )
        relabelled = build_finset(
            [NamedFiniteSet("Point", ("p",)), NamedFiniteSet("Pair", ("x", "y"))]
        )
        assert nno_search(fs.category).triples == ()
        assert nno_search(relabelled.category).triples == ()
        one = build_finset([NamedFiniteSet("One", ("*",))])
        other = build_finset([NamedFiniteSet("Dot", ("d",))])
        assert len(nno_search(one.category).triples) == 1
        assert len(nno_search(other.category).triples) == 1


class TestDedekindPrefix:
    def test_standard_system_passes(self):
        report = dedekind_prefix_check(BoundedNaturalSystem.standard(5))
        assert report.ok
        assert "undefined beyond the bound" in report.boundary_note

    def test_zero_in_the_image_fails(self):
        sys = BoundedNaturalSystem(
            2, ("0", "1", "2"), {"0": "1", "1": "0"}
        )
        report = dedekind_prefix_check(sys)
        assert not report.ok
        assert "zero" in report.witness

    def test_repeated_successor_fails(self):
        sys = BoundedNaturalSystem(
            2, ("0", "1", "2"), {"0": "1", "1": "1"}
        )
        report = dedekind_prefix_check(sys)
        assert not report.ok
        assert "repeats" in report.witness

    def test_bound_one_edge_case(self):
        report = dedekind_prefix_check(BoundedNaturalSystem.standard(1))
        assert report.ok
        assert report.boundary_note
