"""
Tests for W-symbols and their brackets.
"""

import pytest

from ckcas.core.algebra import Generator, all_generators
from ckcas.core.enveloping import EnvelopingElement, monomial_commutes, multiply, scale
from ckcas.core.exceptions import AlgebraError, CancellationError, IndexSetError
from ckcas.core.omega import OmegaPoly, OmegaSpec
from ckcas.core.wsymbols import (
    WIndexSet,
    all_index_sets,
    closed_form_factor,
    is_w_homogeneous,
    omega_weight,
    term_weights,
    transposition_count,
    w_gen_bracket,
    w_gen_bracket_closed_form,
    w_symbol,
    w_w_bracket,
)
from tests.golden_data import OMEGA_W_BRACKETS_N4, W012345_TERMS, W0123_TERMS, W_W_BRACKETS_N4


def coefficient(n, sign, exps):
    """Monomial sign·ω^exps, exponents padded with zeros up to n."""
    exps = tuple(exps) + (0,) * (n - len(exps))
    return OmegaPoly.monomial(n, exps, sign)


def generator(n, pair):
    return EnvelopingElement.generator(n, Generator(*pair))


def expand(spec, terms):
    """Σ sign·ω^exps·Ω_gen·W_ix as an element of U(g)."""
    total = EnvelopingElement.zero(spec.n)
    for sign, exps, pair, label in terms:
        product = multiply(spec, generator(spec.n, pair), w_symbol(spec, label).element)
        total = total + scale(product, coefficient(spec.n, sign, exps))
    return total


class TestWIndexSet:
    """Test cases for index sets."""

    def test_blocks(self):
        """Test the a and b halves."""
        ix = WIndexSet.parse("012345")
        assert ix.s == 3
        assert ix.a_block == (0, 1, 2)
        assert ix.b_block == (3, 4, 5)
        assert ix.without(0, 5) == (1, 2, 3, 4)
        assert str(ix) == "W_{012345}"

    def test_wide_indices(self):
        """Test comma separated labels once an index reaches 10."""
        ix = WIndexSet.parse("0,1,10,11")
        assert ix.indices == (0, 1, 10, 11)
        assert ix.label == "0,1,10,11"

    @pytest.mark.parametrize("text", ["012", "0", "0213", "0112", "01a3", ""])
    def test_malformed(self, text):
        """Test that odd, unsorted and non-numeric sets are refused."""
        with pytest.raises(IndexSetError):
            WIndexSet.parse(text)

    def test_negative_index(self):
        """Test that negative indices are refused."""
        with pytest.raises(IndexSetError):
            WIndexSet((-1, 0))

    def test_all_index_sets(self):
        """Test enumeration in lexicographic order."""
        sets = all_index_sets(4, 2)
        assert [ix.label for ix in sets] == ["0123", "0124", "0134", "0234", "1234"]
        assert len(all_index_sets(5, 2)) == 15
        with pytest.raises(IndexSetError):
            all_index_sets(4, 0)

    def test_transposition_count(self):
        """Test inversion counting."""
        assert transposition_count((0, 1, 2)) == 0
        assert transposition_count((3, 1, 2)) == 2
        assert transposition_count((1, 2, 0, 2)) == 2


class TestWSymbolExpansion:
    """Test cases for the recursive construction."""

    def test_two_index_symbol_is_generator(self):
        """Test W_ab = Ω_ab."""
        spec = OmegaSpec.symbolic(3)
        assert w_symbol(spec, "13").element == generator(3, (1, 3))

    @pytest.mark.parametrize("n", [3, 4])
    def test_w0123(self, n):
        """Test W_0123 = ω2 Ω01Ω23 − Ω02Ω13 + Ω03Ω12."""
        spec = OmegaSpec.symbolic(n)
        expected = EnvelopingElement.zero(n)
        for (left, right), sign, exps in W0123_TERMS:
            product = multiply(spec, generator(n, left), generator(n, right))
            expected = expected + scale(product, coefficient(n, sign, exps))
        symbol = w_symbol(spec, "0123")
        assert symbol.s == 2
        assert symbol.element == expected
        assert len(symbol.element) == 3

    def test_w012345(self):
        """Test the six-index symbol against its expansion in four-index symbols."""
        spec = OmegaSpec.symbolic(5)
        assert w_symbol(spec, "012345").element == expand(spec, W012345_TERMS)

    def test_exceeds_algebra(self):
        """Test that indices above N are refused."""
        with pytest.raises(IndexSetError):
            w_symbol(OmegaSpec.symbolic(3), "0124")

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_monomials_commute(self, n):
        """Test that every monomial has pairwise commuting factors."""
        spec = OmegaSpec.symbolic(n)
        for s in range(1, (n + 1) // 2 + 1):
            for ix in all_index_sets(n, s):
                for word, _ in w_symbol(spec, ix).element.terms():
                    assert monomial_commutes(spec, word)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_homogeneous_degree(self, n):
        """Test that W over 2s indices has degree exactly s."""
        spec = OmegaSpec.symbolic(n)
        for s in range(1, (n + 1) // 2 + 1):
            for ix in all_index_sets(n, s):
                assert is_w_homogeneous(spec, ix)

    def test_dimensional_weight(self):
        """Test the common weight of the W_0123 terms."""
        spec = OmegaSpec.symbolic(4)
        assert omega_weight(spec, "0123") == (1, 2, 1, 0)
        for ix in all_index_sets(5, 2):
            omega_weight(OmegaSpec.symbolic(5), ix)

    def test_inhomogeneous_weights(self):
        """Test that mixed weights are reported."""
        spec = OmegaSpec.symbolic(2)
        element = generator(2, (0, 1)) + generator(2, (0, 2))
        assert len(term_weights(spec, element)) == 2


class TestGeneratorBrackets:
    """Test cases for [Ω, W]."""

    def test_golden_table(self):
        """Test every [Ω_ab, W] at N=4 against the published table."""
        spec = OmegaSpec.symbolic(4)
        for g in all_generators(4):
            for ix in all_index_sets(4, 2):
                key = ((g.a, g.b), ix.label)
                result = w_gen_bracket(spec, g, ix)
                if key not in OMEGA_W_BRACKETS_N4:
                    assert result.is_zero, key
                    continue
                sign, exps, target = OMEGA_W_BRACKETS_N4[key]
                expected = scale(w_symbol(spec, target).element, coefficient(4, sign, exps))
                assert result == expected, key

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_closed_form_matches_engine(self, n):
        """Test the closed formula against the straightened commutator."""
        spec = OmegaSpec.symbolic(n)
        for s in range(1, (n + 1) // 2 + 1):
            for ix in all_index_sets(n, s):
                for g in all_generators(n):
                    assert w_gen_bracket_closed_form(spec, g, ix) == w_gen_bracket(spec, g, ix), (g, ix)

    def test_closed_form_on_contracted_algebra(self):
        """Test the closed formula with fixed and zero coefficients."""
        spec = OmegaSpec.fixed([1, -1, 0, 2])
        for ix in all_index_sets(4, 2):
            for g in all_generators(4):
                assert w_gen_bracket_closed_form(spec, g, ix) == w_gen_bracket(spec, g, ix), (g, ix)

    def test_closed_form_zero_cases(self):
        """Test that both or neither shared index gives zero."""
        spec = OmegaSpec.symbolic(4)
        assert w_gen_bracket_closed_form(spec, Generator(0, 1), "0123").is_zero
        assert w_gen_bracket_closed_form(spec, Generator(2, 3), "0123").is_zero
        assert not w_gen_bracket_closed_form(spec, Generator(0, 4), "1234").is_zero

    def test_closed_form_foreign_generator(self):
        """Test that generators outside the algebra are refused."""
        with pytest.raises(AlgebraError):
            w_gen_bracket_closed_form(OmegaSpec.symbolic(3), Generator(0, 4), "0123")

    def test_odd_exponent(self):
        """Test that an impossible square root raises."""
        spec = OmegaSpec.symbolic(3)
        with pytest.raises(CancellationError):
            closed_form_factor(spec, Generator(0, 1), WIndexSet.parse("0123"), WIndexSet.parse("12"))


class TestWWBrackets:
    """Test cases for [W, W]."""

    def test_golden_table(self):
        """Test every [W, W'] at N=4 against the published table."""
        spec = OmegaSpec.symbolic(4)
        for (left, right), terms in W_W_BRACKETS_N4.items():
            assert w_w_bracket(spec, left, right) == expand(spec, terms), (left, right)

    def test_antisymmetry(self):
        """Test [W, W'] = −[W', W]."""
        spec = OmegaSpec.symbolic(4)
        assert w_w_bracket(spec, "0124", "0123") == -w_w_bracket(spec, "0123", "0124")

    def test_self_bracket(self):
        """Test that a W-symbol commutes with itself."""
        spec = OmegaSpec.symbolic(4)
        assert w_w_bracket(spec, "0134", "0134").is_zero
