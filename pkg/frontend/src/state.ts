/**
 * Viewer state and its transitions. All transitions are pure: event
 * handlers build the next state and hand it to the renderer, so each UI
 * event is atomic and the tests below need no DOM.
 */

import type { MaskGrid } from "./decode.js";
import { STEP_COUNT, FIRST_YEAR } from "./timeline.js";

export interface ViewerState {
  sliderIndex: number;
  selectedPoi: string | null;
  uiHidden: boolean;
  /** Mask currently drawn; null until the first fetch lands. */
  mask: MaskGrid | null;
  /** Slider index the drawn mask belongs to, -1 when mask is null. */
  maskIndex: number;
  /** Set while a fetch is outstanding so the year readout can hint. */
  loading: boolean;
  /** Non-null shows the retry banner with this message. */
  error: string | null;
}

export function initialState(): ViewerState {
  return {
    sliderIndex: 0,
    selectedPoi: null,
    uiHidden: false,
    mask: null,
    maskIndex: -1,
    loading: false,
    error: null,
  };
}

export function displayedYear(state: ViewerState): number {
  return FIRST_YEAR + state.sliderIndex;
}

export function withSlider(state: ViewerState, index: number): ViewerState {
  const clamped = Math.min(STEP_COUNT - 1, Math.max(0, Math.round(index)));
  return { ...state, sliderIndex: clamped, loading: clamped !== state.maskIndex };
}

export function withMask(state: ViewerState, index: number, mask: MaskGrid): ViewerState {
  // a mask for a superseded index still replaces an older drawing, but
  // loading stays on until the current index arrives
  return {
    ...state,
    mask,
    maskIndex: index,
    loading: index !== state.sliderIndex,
    error: null,
  };
}

export function withError(state: ViewerState, message: string): ViewerState {
  return { ...state, loading: false, error: message };
}

export function selectPoi(state: ViewerState, id: string | null): ViewerState {
  return { ...state, selectedPoi: id };
}

export function toggleUi(state: ViewerState): ViewerState {
  return { ...state, uiHidden: !state.uiHidden };
}

/** Which controls the renderer shows, derived entirely from state. */
export interface Layout {
  slider: boolean;
  jumpButtons: boolean;
  yearReadout: boolean;
  poiPanel: boolean;
  statsPanel: boolean;
  compass: boolean;
  hideToggle: boolean;
  errorBanner: boolean;
}

export function layout(state: ViewerState): Layout {
  if (state.uiHidden) {
    // everything but the toggle goes away; the map stays; a pending
    // error banner comes back when the UI does
    return {
      slider: false,
      jumpButtons: false,
      yearReadout: false,
      poiPanel: false,
      statsPanel: false,
      compass: false,
      hideToggle: true,
      errorBanner: false,
    };
  }
  return {
    slider: true,
    jumpButtons: true,
    yearReadout: true,
    poiPanel: state.selectedPoi !== null,
    statsPanel: true,
    compass: true,
    hideToggle: true,
    errorBanner: state.error !== null,
  };
}
