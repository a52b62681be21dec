from __future__ import annotations

import hypothesis.strategies as st
import pytest
from hypothesis import given

from ksparity.errors import SymbolError
from ksparity.symbols import ObsSymbol, SystemSymbol

from reference_data import STAR_PROOF_CLASSES, STAR_SYMBOL, STAR_SYSTEM_SYMBOL


def test_star_symbol_from_counts():
    sym = ObsSymbol.from_counts([2] * 12, [5, 4, 4, 4, 4, 3])
    assert str(sym) == STAR_SYMBOL
    assert sym.pretty() == "12₂-1₅4₄1₃"
    assert sym.balanced


def test_parse_round_trip():
    assert str(ObsSymbol.parse(STAR_SYMBOL)) == STAR_SYMBOL
    assert str(SystemSymbol.parse(STAR_SYSTEM_SYMBOL)) == STAR_SYSTEM_SYMBOL
    for text, *_ in STAR_PROOF_CLASSES:
        assert str(SystemSymbol.parse(text)) == text


def test_system_symbol_counts():
    sym = SystemSymbol.parse(STAR_SYSTEM_SYMBOL)
    assert sym.projector_count == 52
    assert sym.basis_count == 30
    assert sym.pretty().startswith("16¹₆32²₅4⁴₄-1₁₆")


@pytest.mark.parametrize("bad", ["12_2-1_5 4_4", "12_2", "12_2-1_5-4_4", "12x2-1_24"])
def test_obs_parse_rejects(bad):
    with pytest.raises(SymbolError):
        ObsSymbol.parse(bad)


def test_system_parse_rejects_unbalanced():
    with pytest.raises(SymbolError):
        SystemSymbol.parse("16^1_6-1_16")
    with pytest.raises(SymbolError):
        SystemSymbol.parse("16_6-1_96")


@given(
    st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=10),
    st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=10),
)
def test_sum_rule_matches_totals(mults, sizes):
    sym = ObsSymbol.from_counts(mults, sizes)
    assert sym.left_total == sum(mults)
    assert sym.right_total == sum(sizes)
    if sym.balanced:
        assert ObsSymbol.parse(str(sym)) == sym
    else:
        with pytest.raises(SymbolError):
            ObsSymbol.parse(str(sym))
