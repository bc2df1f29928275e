"""Sea-level projection curves and the year timeline.

The interactive timeline has 80 slider positions, one per calendar year
from 2021 through 2100.  A projection curve is a sparse set of
(year, level) anchors; levels between anchors interpolate linearly and
clamp outside the anchored range.  Levels are meters above the start-year
datum, so curves normally begin at (2021, 0.0).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .errors import (
    CoverageGap,
    DuplicateYear,
    IndexOutOfRange,
    NonNumericField,
    YearOutOfRange,
)


@dataclass(frozen=True)
class TimelineSpec:
    start_year: int = 2021
    end_year: int = 2100
    step_count: int = 80


TIMELINE = TimelineSpec()


@dataclass(frozen=True)
class SeaLevelCurve:
    """Sorted (year, level_m) anchors spanning the timeline."""

    anchors: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        if len(self.anchors) < 2:
            raise CoverageGap(f"curve needs at least 2 anchors, got {len(self.anchors)}")
        years = [y for y, _ in self.anchors]
        for prev, cur in zip(years, years[1:]):
            if cur == prev:
                raise DuplicateYear(f"year {cur} appears more than once")
            if cur < prev:
                raise ValueError(f"anchors not sorted by year ({prev} before {cur})")
        if years[0] > TIMELINE.start_year:
            raise CoverageGap(
                f"first anchor year {years[0]} is after timeline start {TIMELINE.start_year}"
            )
        if years[-1] < TIMELINE.end_year:
            raise CoverageGap(
                f"last anchor year {years[-1]} is before timeline end {TIMELINE.end_year}"
            )
        for y, level in self.anchors:
            if not math.isfinite(level):
                raise ValueError(f"anchor level for year {y} is not finite")

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(y for y, _ in self.anchors)

    @property
    def levels(self) -> tuple[float, ...]:
        return tuple(lv for _, lv in self.anchors)


def parse_curve(text: str) -> SeaLevelCurve:
    """Parse 'year,level_m' CSV lines; '#' starts a comment, blanks skipped.

    Rows may arrive in any order.  Raises DuplicateYear, CoverageGap or
    NonNumericField with the offending line number.
    """
    anchors: dict[int, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise NonNumericField(f"line {lineno}: expected 'year,level_m', got {raw!r}")
        try:
            year = int(parts[0].strip())
        except ValueError:
            raise NonNumericField(
                f"line {lineno}: year {parts[0].strip()!r} is not an integer"
            ) from None
        try:
            level = float(parts[1].strip())
        except ValueError:
            raise NonNumericField(
                f"line {lineno}: level {parts[1].strip()!r} is not a number"
            ) from None
        if not math.isfinite(level):
            raise NonNumericField(f"line {lineno}: level {parts[1].strip()!r} is not finite")
        if year in anchors:
            raise DuplicateYear(f"line {lineno}: year {year} appears more than once")
        anchors[year] = level
    return SeaLevelCurve(tuple(sorted(anchors.items())))


def level_for_year(curve: SeaLevelCurve, year: float) -> float:
    """Water level at a (possibly fractional) year.

    Linear between neighboring anchors, clamped to the end levels outside
    the anchored range, and exactly the anchor level at an anchor year.
    """
    years = curve.years
    levels = curve.levels
    if year <= years[0]:
        return levels[0]
    if year >= years[-1]:
        return levels[-1]
    i = bisect_right(years, year) - 1
    if years[i] == year:
        return levels[i]
    t = (year - years[i]) / (years[i + 1] - years[i])
    return levels[i] + t * (levels[i + 1] - levels[i])


def year_for_slider(index: int) -> int:
    """Calendar year of a slider position: 0 -> 2021, 79 -> 2100."""
    if not 0 <= index < TIMELINE.step_count:
        raise IndexOutOfRange(
            f"slider index {index} outside [0, {TIMELINE.step_count - 1}]"
        )
    return TIMELINE.start_year + index


def slider_for_year(year: int) -> int:
    """Slider position of a calendar year: 2021 -> 0, 2050 -> 29, 2100 -> 79."""
    if not TIMELINE.start_year <= year <= TIMELINE.end_year:
        raise YearOutOfRange(
            f"year {year} outside [{TIMELINE.start_year}, {TIMELINE.end_year}]"
        )
    return year - TIMELINE.start_year
