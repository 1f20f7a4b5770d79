"""
Tests for contraction coefficients and ω polynomials.
"""

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from ckcas.core.exceptions import OmegaError
from ckcas.core.omega import OmegaEntry, OmegaPoly, OmegaSpec, format_fraction, to_fraction


N = 3

exponent_vectors = st.tuples(*[st.integers(0, 3)] * N)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.dictionaries(exponent_vectors, rationals, max_size=4).map(lambda terms: OmegaPoly(N, terms))


class TestToFraction:
    """Test cases for exact rational parsing."""

    def test_accepts_exact_values(self):
        """Test ints, Fractions and rational strings."""
        assert to_fraction(3) == Fraction(3)
        assert to_fraction(Fraction(1, 3)) == Fraction(1, 3)
        assert to_fraction("-1/2") == Fraction(-1, 2)
        assert to_fraction(" 4 ") == Fraction(4)

    def test_rejects_inexact_values(self):
        """Test that floats, booleans and garbage are refused."""
        for bad in (0.5, True, "abc", "1/0", None):
            with pytest.raises(OmegaError):
                to_fraction(bad)

    def test_format_fraction(self):
        """Test the p/q form used in JSON."""
        assert format_fraction(Fraction(3)) == "3/1"
        assert format_fraction(Fraction(-2, 6)) == "-1/3"


class TestOmegaSpec:
    """Test cases for OmegaSpec."""

    def test_symbolic(self):
        """Test a fully symbolic spec."""
        spec = OmegaSpec.symbolic(4)
        assert spec.n == 4
        assert spec.is_fully_symbolic
        assert not spec.is_fixed
        assert spec.symbolic_indices == (1, 2, 3, 4)
        assert str(spec) == "(ω1,ω2,ω3,ω4)"

    def test_fixed(self):
        """Test a fixed spec and its values."""
        spec = OmegaSpec.fixed([1, -1, 0])
        assert spec.is_fixed
        assert not spec.all_nonzero
        assert spec.value(2) == Fraction(-1)
        assert str(spec) == "(1,-1,0)"

    def test_parse_list(self):
        """Test parsing of comma separated values with symbolic markers."""
        spec = OmegaSpec.parse("0, -1, w, 1/2")
        assert spec.values() == (Fraction(0), Fraction(-1), None, Fraction(1, 2))

    def test_parse_symbolic_needs_n(self):
        """Test that 'symbolic' requires n."""
        assert OmegaSpec.parse("symbolic", 3) == OmegaSpec.symbolic(3)
        with pytest.raises(OmegaError):
            OmegaSpec.parse("symbolic")

    def test_parse_errors(self):
        """Test malformed lists and size mismatches."""
        with pytest.raises(OmegaError):
            OmegaSpec.parse("1,,1")
        with pytest.raises(OmegaError):
            OmegaSpec.parse("1,1", 3)
        with pytest.raises(OmegaError):
            OmegaSpec.parse("1,x")

    def test_value_out_of_range(self):
        """Test index checking of value()."""
        with pytest.raises(OmegaError):
            OmegaSpec.symbolic(2).value(3)

    def test_substitute(self):
        """Test fixing symbolic coefficients."""
        spec = OmegaSpec.symbolic(3).substitute({2: 0})
        assert spec.values() == (None, Fraction(0), None)

    def test_substitute_errors(self):
        """Test that fixed and missing variables cannot be assigned."""
        spec = OmegaSpec.from_values([1, None])
        with pytest.raises(OmegaError):
            spec.substitute({1: 0})
        with pytest.raises(OmegaError):
            spec.substitute({3: 0})

    def test_reversed(self):
        """Test reversal of the coefficient order."""
        assert OmegaSpec.fixed([0, 1, -1]).reversed() == OmegaSpec.fixed([-1, 1, 0])

    def test_list_form(self):
        """Test the JSON entry list."""
        spec = OmegaSpec.from_values([None, Fraction(-1, 2)])
        assert spec.to_list() == [{"symbolic": True}, {"fixed": "-1/2"}]
        assert OmegaSpec.from_list(spec.to_list()) == spec

    def test_malformed_entry(self):
        """Test that unknown entry records are refused."""
        with pytest.raises(OmegaError):
            OmegaEntry.from_dict({"value": 1})
        with pytest.raises(OmegaError):
            OmegaSpec(())


class TestOmegaPoly:
    """Test cases for OmegaPoly arithmetic."""

    def setup_method(self):
        """Set up test fixtures."""
        self.w1 = OmegaPoly.variable(N, 1)
        self.w2 = OmegaPoly.variable(N, 2)

    def test_zero_is_never_stored(self):
        """Test that cancelling terms disappear."""
        poly = self.w1 - self.w1
        assert poly.is_zero
        assert len(poly) == 0
        assert OmegaPoly(N, {(1, 0, 0): 0}).is_zero

    def test_constant(self):
        """Test constants and comparison with numbers."""
        assert OmegaPoly.constant(N, 3) == 3
        assert OmegaPoly.one(N).constant_value() == 1
        assert OmegaPoly.zero(N) == 0
        with pytest.raises(OmegaError):
            self.w1.constant_value()

    def test_multiplication(self):
        """Test products of polynomials."""
        product = (self.w1 + 1) * (self.w1 - 1)
        assert product == self.w1 ** 2 - 1
        assert (self.w1 * self.w2).leading() == ((1, 1, 0), Fraction(1))

    def test_scalar_multiplication(self):
        """Test multiplication by rationals."""
        assert self.w1 * Fraction(1, 2) == OmegaPoly.monomial(N, (1, 0, 0), Fraction(1, 2))
        assert (self.w1 * 0).is_zero
        assert 2 * self.w1 == self.w1 + self.w1

    def test_mismatched_sizes(self):
        """Test that polynomials over different N do not mix."""
        with pytest.raises(OmegaError):
            self.w1 + OmegaPoly.variable(2, 1)

    def test_malformed_exponents(self):
        """Test exponent vector validation."""
        with pytest.raises(OmegaError):
            OmegaPoly(N, {(1, 0): 1})
        with pytest.raises(OmegaError):
            OmegaPoly(N, {(-1, 0, 0): 1})

    def test_substitute(self):
        """Test partial evaluation."""
        poly = self.w1 * self.w2 + self.w2
        assert poly.substitute({1: 0}) == self.w2
        assert poly.substitute({2: 0}).is_zero
        assert poly.substitute({1: 2}) == self.w2 * 3

    def test_evaluate(self):
        """Test full evaluation and the missing-value error."""
        poly = self.w1 * self.w2 - 1
        assert poly.evaluate({1: 2, 2: Fraction(1, 2)}) == 0
        with pytest.raises(OmegaError):
            poly.evaluate({1: 2})

    def test_sorted_terms(self):
        """Test canonical ordering: lower degree first."""
        poly = self.w1 * self.w2 + self.w2 + 5
        exps = [e for e, _ in poly.sorted_terms()]
        assert exps == [(0, 0, 0), (0, 1, 0), (1, 1, 0)]

    def test_list_form(self):
        """Test the JSON record list."""
        poly = self.w1 * Fraction(-1, 3) + 2
        data = poly.to_list()
        assert data[0] == {"rational": "2/1", "exponents": [0, 0, 0]}
        assert OmegaPoly.from_list(N, data) == poly

    def test_list_form_errors(self):
        """Test malformed and repeated records."""
        with pytest.raises(OmegaError):
            OmegaPoly.from_list(N, [{"rational": "1/1"}])
        record = {"rational": "1/1", "exponents": [0, 0, 0]}
        with pytest.raises(OmegaError):
            OmegaPoly.from_list(N, [record, record])

    def test_repr(self):
        """Test the debugging form."""
        assert repr(OmegaPoly.zero(N)) == "0"
        assert repr(self.w1 * self.w2) == "ω1ω2"

    @given(polys, polys, polys)
    @settings(max_examples=50, deadline=None)
    def test_ring_axioms(self, p, q, r):
        """Test commutativity, associativity and distributivity."""
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == 0

    @given(polys, polys, st.dictionaries(st.integers(1, N), rationals, max_size=N))
    @settings(max_examples=50, deadline=None)
    def test_substitution_is_a_homomorphism(self, p, q, assignment):
        """Test that substitution commutes with + and ×."""
        assert (p + q).substitute(assignment) == p.substitute(assignment) + q.substitute(assignment)
        assert (p * q).substitute(assignment) == p.substitute(assignment) * q.substitute(assignment)

    @given(polys)
    @settings(max_examples=50, deadline=None)
    def test_equal_polys_hash_alike(self, p):
        """Test hashing of equal polynomials."""
        copy = OmegaPoly(N, dict(p.terms()))
        assert copy == p
        assert hash(copy) == hash(p)
