"""
Tests for Table Regeneration - Layout and agreement with the printed values
"""

import pytest

from analysis import (
    PRINTED_TABLE1,
    TABLE1_ABSCISSAE,
    TABLE1_KINDS,
    CellStatus,
    compare_table1,
    make_table1,
)
from bounds import BoundKind
from errors import DomainError


@pytest.fixture(scope="module")
def comparison():
    return compare_table1()


class TestMakeTable:
    """Test cases for the regenerated table."""

    def test_layout(self):
        rows = make_table1()
        assert len(rows) == 31 * 8
        assert [r.kind for r in rows[:8]] == list(TABLE1_KINDS)
        assert {r.x for r in rows[:8]} == {0.1}
        assert rows[-1].x == 8.5

    def test_eidous_column_is_non_negative(self):
        rows = [r for r in make_table1() if r.kind is BoundKind.EIDOUS]
        assert all(r.error >= -1e-15 for r in rows)

    def test_published_cell(self):
        cell = next(r for r in make_table1([2.9]) if r.kind is BoundKind.EIDOUS)
        assert cell.error == pytest.approx(5.78e-5, rel=0.02)

    def test_custom_abscissae(self):
        assert len(make_table1([1.0, 2.0])) == 16

    def test_negative_abscissa(self):
        with pytest.raises(DomainError):
            make_table1([1.0, -1.0])

    def test_printed_table_is_complete(self):
        assert set(PRINTED_TABLE1) == set(TABLE1_ABSCISSAE)
        assert all(len(values) == len(TABLE1_KINDS) for values in PRINTED_TABLE1.values())


class TestCompareTable:
    """Test cases for the comparison with the printed table."""

    def test_no_mismatch(self, comparison):
        mismatches = [(c.x, c.kind.value, c.computed, c.printed) for c in comparison if c.status is CellStatus.MISMATCH]
        assert mismatches == []

    def test_kouba_column_excluded(self, comparison):
        kouba = [c for c in comparison if c.kind is BoundKind.KOUBA]
        assert len(kouba) == 31
        assert all(c.status is CellStatus.EXCLUDED for c in kouba)

    def test_smallest_eidous_cells_excluded(self, comparison):
        excluded = {(c.x, c.kind) for c in comparison if c.status is CellStatus.EXCLUDED}
        assert (0.1, BoundKind.EIDOUS) in excluded
        assert (0.3, BoundKind.EIDOUS) in excluded
        assert (0.5, BoundKind.EIDOUS) not in excluded

    def test_bercu_beyond_validity_compared_by_sign(self, comparison):
        bercu = {c.x: c for c in comparison if c.kind is BoundKind.BERCU}
        assert bercu[6.0].sign_only is False
        for x in (6.5, 7.0, 7.5, 8.0, 8.5):
            assert bercu[x].sign_only is True
            assert bercu[x].computed < 0.0
            assert bercu[x].status is CellStatus.MATCH

    def test_every_cell_compared(self, comparison):
        assert len(comparison) == 31 * 8
        assert sum(1 for c in comparison if c.status is CellStatus.EXCLUDED) == 33
