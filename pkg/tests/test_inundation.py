"""Flood-fill behavior: seeding, connectivity, stats, and the relation
between the connected model and the naive threshold model."""

import numpy as np
import pytest

from oracles import border_seed_reference, flood_reference
from tidelens.errors import DimensionMismatch, SeedOutOfBounds
from tidelens.inundation import (
    FloodMask,
    boundary_seeds,
    flood_mask,
    mask_diff,
    mask_stats,
    threshold_mask,
)
from conftest import make_dem

# the canonical 3x3: a low border cell and a low interior cell that is
# walled off from it
BOWL = [[5.0, 5.0, 5.0], [5.0, 1.0, 5.0], [0.0, 5.0, 5.0]]


def random_dem(rng, max_side=20, nodata_frac=0.1):
    nr = int(rng.integers(2, max_side + 1))
    nc = int(rng.integers(2, max_side + 1))
    values = np.round(rng.uniform(-5.0, 10.0, size=(nr, nc)), 2)
    values[rng.random(size=(nr, nc)) < nodata_frac] = -9999.0
    return make_dem(values)


class TestBoundarySeeds:
    def test_default_takes_qualifying_border_cells(self):
        dem = make_dem(BOWL)
        assert boundary_seeds(dem, 1.0) == {(2, 0)}
        assert boundary_seeds(dem, 5.0) == {
            (0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2),
        }

    def test_level_below_everything_gives_no_seeds(self):
        assert boundary_seeds(make_dem(BOWL), -1.0) == set()

    def test_nodata_border_cells_never_seed(self):
        values = [[-9999.0, 0.0], [0.0, 0.0]]
        assert boundary_seeds(make_dem(values), 0.0) == {(0, 1), (1, 0), (1, 1)}

    def test_overrides_replace_border_rule(self):
        dem = make_dem(BOWL)
        assert boundary_seeds(dem, 1.0, overrides=[(1, 1)]) == {(1, 1)}

    def test_overrides_filtered_by_level(self):
        dem = make_dem(BOWL)
        # (0, 0) sits at 5.0, above the level, so it cannot seed
        assert boundary_seeds(dem, 1.0, overrides=[(0, 0), (1, 1)]) == {(1, 1)}

    def test_override_out_of_bounds(self):
        with pytest.raises(SeedOutOfBounds):
            boundary_seeds(make_dem(BOWL), 1.0, overrides=[(3, 0)])
        with pytest.raises(SeedOutOfBounds):
            boundary_seeds(make_dem(BOWL), 1.0, overrides=[(0, -1)])

    def test_matches_reference_on_random_grids(self):
        rng = np.random.default_rng(83)
        for _ in range(40):
            dem = random_dem(rng)
            level = float(rng.uniform(-5, 10))
            assert boundary_seeds(dem, level) == border_seed_reference(
                dem.values, dem.nodata_value, level
            )


class TestFloodMask:
    def test_walled_interior_cell_stays_dry(self):
        dem = make_dem(BOWL)
        mask = flood_mask(dem, 1.0, boundary_seeds(dem, 1.0))
        assert mask.cell_set() == {(2, 0)}

    def test_threshold_also_takes_the_walled_cell(self):
        dem = make_dem(BOWL)
        assert threshold_mask(dem, 1.0).cell_set() == {(2, 0), (1, 1)}

    def test_boundary_level_is_inclusive(self):
        dem = make_dem([[0.0, 5.0], [5.0, 5.0]])
        mask = flood_mask(dem, 0.0, boundary_seeds(dem, 0.0))
        assert mask.cell_set() == {(0, 0)}

    def test_level_below_min_floods_nothing(self):
        dem = make_dem(BOWL)
        mask = flood_mask(dem, -0.5, boundary_seeds(dem, -0.5))
        assert mask.flooded_count() == 0

    def test_level_above_max_floods_everything_reachable(self):
        dem = make_dem(BOWL)
        mask = flood_mask(dem, 99.0, boundary_seeds(dem, 99.0))
        assert mask.flooded_count() == 9

    def test_nodata_blocks_water(self):
        # a NoData wall separates two low halves; seeds only on the left
        values = [
            [0.0, -9999.0, 0.0],
            [0.0, -9999.0, 0.0],
            [0.0, -9999.0, 0.0],
        ]
        dem = make_dem(values)
        mask = flood_mask(dem, 0.0, {(0, 0)})
        assert mask.cell_set() == {(0, 0), (1, 0), (2, 0)}

    def test_diagonal_gap_respects_connectivity(self):
        # water can pass the diagonal gap only with 8-connectivity
        values = [
            [0.0, 9.0, 9.0],
            [9.0, 0.0, 9.0],
            [9.0, 9.0, 0.0],
        ]
        dem = make_dem(values)
        assert flood_mask(dem, 0.0, {(0, 0)}, connectivity=4).cell_set() == {(0, 0)}
        assert flood_mask(dem, 0.0, {(0, 0)}, connectivity=8).cell_set() == {
            (0, 0), (1, 1), (2, 2),
        }

    def test_unqualifying_seeds_are_ignored(self):
        dem = make_dem(BOWL)
        mask = flood_mask(dem, 1.0, {(0, 0), (2, 0)})  # (0,0) is at 5.0
        assert mask.cell_set() == {(2, 0)}

    def test_seed_off_grid_raises(self):
        with pytest.raises(SeedOutOfBounds):
            flood_mask(make_dem(BOWL), 1.0, {(9, 9)})

    def test_bad_connectivity_rejected(self):
        with pytest.raises(ValueError):
            flood_mask(make_dem(BOWL), 1.0, set(), connectivity=6)

    def test_seed_order_is_irrelevant(self):
        rng = np.random.default_rng(3)
        dem = random_dem(rng)
        level = 2.0
        seeds = boundary_seeds(dem, level)
        a = flood_mask(dem, level, sorted(seeds))
        b = flood_mask(dem, level, sorted(seeds, reverse=True))
        assert np.array_equal(a.cells, b.cells)

    def test_flood_is_subset_of_threshold(self):
        rng = np.random.default_rng(17)
        for _ in range(40):
            dem = random_dem(rng)
            level = float(rng.uniform(-5, 10))
            flooded = flood_mask(dem, level, boundary_seeds(dem, level)).cells
            naive = threshold_mask(dem, level).cells
            assert not (flooded & ~naive).any(), "flood exceeded threshold"

    def test_monotone_in_level(self):
        rng = np.random.default_rng(23)
        for _ in range(25):
            dem = random_dem(rng)
            lo, hi = sorted(rng.uniform(-5, 10, size=2))
            low = flood_mask(dem, lo, boundary_seeds(dem, lo)).cells
            high = flood_mask(dem, hi, boundary_seeds(dem, hi)).cells
            assert not (low & ~high).any(), f"water receded between {lo} and {hi}"

    def test_every_wet_cell_reaches_a_seed_through_water(self):
        # re-walk the output: BFS restricted to wet cells must reach all of them
        rng = np.random.default_rng(31)
        for _ in range(20):
            dem = random_dem(rng)
            level = float(rng.uniform(-2, 8))
            seeds = boundary_seeds(dem, level)
            mask = flood_mask(dem, level, seeds)
            wet = mask.cells
            reach = np.zeros_like(wet)
            stack = [s for s in seeds if wet[s]]
            for s in stack:
                reach[s] = True
            while stack:
                r, c = stack.pop()
                for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                    if (
                        0 <= rr < dem.nrows
                        and 0 <= cc < dem.ncols
                        and wet[rr, cc]
                        and not reach[rr, cc]
                    ):
                        reach[rr, cc] = True
                        stack.append((rr, cc))
            assert np.array_equal(reach, wet), "wet cell not connected to any seed"

    def test_agrees_with_union_find_oracle(self):
        rng = np.random.default_rng(47)
        for _ in range(30):
            dem = random_dem(rng, max_side=15)
            level = float(rng.uniform(-5, 10))
            connectivity = int(rng.choice([4, 8]))
            seeds = boundary_seeds(dem, level)
            ours = flood_mask(dem, level, seeds, connectivity).cells
            ref = flood_reference(dem.values, dem.nodata_value, level, seeds, connectivity)
            assert np.array_equal(ours, ref)


class TestMaskStats:
    def test_counts_and_area(self):
        dem = make_dem(BOWL)  # cellsize 10 -> 100 m^2 per cell
        mask = flood_mask(dem, 1.0, boundary_seeds(dem, 1.0))
        stats = mask_stats(mask, dem)
        assert stats.flooded_cells == 1
        assert stats.flooded_area_m2 == 100.0
        assert stats.flooded_fraction == pytest.approx(1 / 9)

    def test_fraction_ignores_nodata_cells(self):
        values = [[0.0, -9999.0], [0.0, 5.0]]
        dem = make_dem(values)
        stats = mask_stats(flood_mask(dem, 0.0, boundary_seeds(dem, 0.0)), dem)
        assert stats.flooded_cells == 2
        assert stats.flooded_fraction == pytest.approx(2 / 3)

    def test_empty_mask(self):
        dem = make_dem(BOWL)
        stats = mask_stats(flood_mask(dem, -10.0, set()), dem)
        assert stats == type(stats)(0, 0.0, 0.0)

    def test_dimension_mismatch(self):
        dem = make_dem(BOWL)
        other = FloodMask(2, 2, 0.0, np.zeros((2, 2), dtype=bool))
        with pytest.raises(DimensionMismatch):
            mask_stats(other, dem)

    def test_full_flood_fraction_is_one(self):
        dem = make_dem(BOWL)
        stats = mask_stats(flood_mask(dem, 99.0, boundary_seeds(dem, 99.0)), dem)
        assert stats.flooded_fraction == 1.0


class TestMaskDiff:
    def test_identity_is_empty(self):
        dem = make_dem(BOWL)
        mask = flood_mask(dem, 1.0, boundary_seeds(dem, 1.0))
        assert mask_diff(mask, mask) == set()

    def test_rising_water_gains_cells(self):
        dem = make_dem(BOWL)
        low = flood_mask(dem, 1.0, boundary_seeds(dem, 1.0))
        high = flood_mask(dem, 99.0, boundary_seeds(dem, 99.0))
        gained = mask_diff(low, high)
        assert (1, 1) in gained and (2, 0) not in gained
        assert len(gained) == 8

    def test_dimension_mismatch(self):
        a = FloodMask(2, 2, 0.0, np.zeros((2, 2), dtype=bool))
        b = FloodMask(3, 3, 0.0, np.zeros((3, 3), dtype=bool))
        with pytest.raises(DimensionMismatch):
            mask_diff(a, b)

    def test_matches_set_subtraction_on_random_grids(self):
        rng = np.random.default_rng(53)
        for _ in range(20):
            dem = random_dem(rng)
            lo, hi = sorted(rng.uniform(-5, 10, size=2))
            a = flood_mask(dem, lo, boundary_seeds(dem, lo))
            b = flood_mask(dem, hi, boundary_seeds(dem, hi))
            assert mask_diff(a, b) == b.cell_set() - a.cell_set()
