/**
 * Slider/year mapping. Must stay in lockstep with the service: the
 * slider exposes exactly STEP_COUNT discrete positions and position i
 * displays year FIRST_YEAR + i.
 */

export const FIRST_YEAR = 2021;
export const LAST_YEAR = 2100;
export const STEP_COUNT = 80;

/** The three jump buttons under the slider. */
export const JUMP_YEARS = [2021, 2050, 2100] as const;

export function sliderToYear(index: number): number {
  if (!Number.isInteger(index) || index < 0 || index >= STEP_COUNT) {
    throw new RangeError(`slider index ${index} outside [0, ${STEP_COUNT - 1}]`);
  }
  return FIRST_YEAR + index;
}

export function yearToSlider(year: number): number {
  if (!Number.isInteger(year) || year < FIRST_YEAR || year > LAST_YEAR) {
    throw new RangeError(`year ${year} outside [${FIRST_YEAR}, ${LAST_YEAR}]`);
  }
  return year - FIRST_YEAR;
}
