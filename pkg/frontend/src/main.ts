import {
  fetchCurve,
  fetchFloodRle,
  fetchMeta,
  fetchPois,
  fetchPoiStatus,
  fetchTerrainObj,
  CurvePoint,
  Meta,
  Poi,
} from "./api.js";
import { countWet, MaskGrid } from "./decode.js";
import { MaskFetchQueue } from "./fetchqueue.js";
import { elevationGridFromObj } from "./obj.js";
import {
  localToPixel,
  MARKER_SCALE,
  renderCompass,
  renderMarkers,
  renderMask,
  renderTerrain,
} from "./render.js";
import {
  displayedYear,
  initialState,
  layout,
  selectPoi,
  toggleUi,
  ViewerState,
  withError,
  withMask,
  withSlider,
} from "./state.js";
import { JUMP_YEARS, sliderToYear, STEP_COUNT, yearToSlider } from "./timeline.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function setVisible(node: HTMLElement, visible: boolean): void {
  node.classList.toggle("hidden", !visible);
}

async function boot(): Promise<void> {
  const terrainCanvas = el<HTMLCanvasElement>("terrain");
  const floodCanvas = el<HTMLCanvasElement>("flood");
  const markerCanvas = el<HTMLCanvasElement>("markers");
  const compassCanvas = el<HTMLCanvasElement>("compass");
  const slider = el<HTMLInputElement>("year-slider");
  const yearLabel = el<HTMLElement>("year-label");
  const levelLabel = el<HTMLElement>("level-label");
  const statsBody = el<HTMLElement>("stats-body");
  const poiPanel = el<HTMLElement>("poi-panel");
  const poiTitle = el<HTMLElement>("poi-title");
  const poiBody = el<HTMLElement>("poi-body");
  const poiClose = el<HTMLElement>("poi-close");
  const banner = el<HTMLElement>("error-banner");
  const bannerText = el<HTMLElement>("error-text");
  const retryBtn = el<HTMLElement>("retry");
  const hideBtn = el<HTMLElement>("hide-ui");
  const controls = el<HTMLElement>("controls");
  const statsPanel = el<HTMLElement>("stats-panel");
  const titleBar = el<HTMLElement>("title-bar");
  const jumpRow = el<HTMLElement>("jump-row");

  slider.min = "0";
  slider.max = String(STEP_COUNT - 1);
  slider.step = "1";

  let meta: Meta;
  let pois: Poi[];
  let curve: CurvePoint[];
  let terrainObj: string;
  try {
    [meta, pois, curve, terrainObj] = await Promise.all([
      fetchMeta(),
      fetchPois(),
      fetchCurve(),
      fetchTerrainObj(),
    ]);
  } catch (err) {
    bannerText.textContent = `Could not reach the flood service: ${String(err)}`;
    setVisible(banner, true);
    retryBtn.addEventListener("click", () => {
      setVisible(banner, false);
      void boot();
    });
    return;
  }
  console.log(
    `scene ${meta.dem.nrows}x${meta.dem.ncols} @ ${meta.dem.cellsize}m, ` +
      `${pois.length} POIs, curve ${curve[0]?.year}..${curve[curve.length - 1]?.year}`,
  );

  const grid = elevationGridFromObj(
    terrainObj,
    meta.dem.nrows,
    meta.dem.ncols,
    meta.scene.vertical_exaggeration,
    meta.dem.nodata_value,
  );
  renderTerrain(terrainCanvas, grid, meta.dem.cellsize);
  renderCompass(compassCanvas);

  let state = initialState();
  let drawnMaskIndex = -2;
  let drawnSelection: string | null | undefined;
  let poiRequestTag = "";

  const queue = new MaskFetchQueue<MaskGrid>(
    (index) => fetchFloodRle(sliderToYear(index)),
    {
      apply: (index, mask) => update(withMask(state, index, mask)),
      fail: (_index, err) => update(withError(state, String(err))),
    },
  );

  function refreshPoiPanel(s: ViewerState): void {
    if (s.selectedPoi === null) return;
    const poi = pois.find((p) => p.id === s.selectedPoi);
    if (!poi) return;
    poiTitle.textContent = poi.name;
    const year = displayedYear(s);
    const tag = `${poi.id}@${year}`;
    poiRequestTag = tag;
    fetchPoiStatus(poi.id, year).then(
      (status) => {
        if (poiRequestTag !== tag) return; // superseded
        const fate = status.flooded
          ? `flooded, ${status.depth.toFixed(2)} m deep`
          : "above water";
        poiBody.innerHTML = "";
        const fateLine = document.createElement("p");
        fateLine.className = `fate ${status.flooded ? "wet" : "dry"}`;
        fateLine.textContent = `${year}: ${fate} (ground ${status.ground_elevation.toFixed(2)} m)`;
        const blurb = document.createElement("p");
        blurb.textContent = status.blurb;
        const coords = document.createElement("p");
        coords.className = "coords";
        coords.textContent = `${status.lat.toFixed(5)}°, ${status.lon.toFixed(5)}°`;
        poiBody.append(fateLine, blurb, coords);
      },
      () => {
        if (poiRequestTag === tag) poiBody.textContent = "POI lookup failed.";
      },
    );
  }

  function update(next: ViewerState): void {
    state = next;
    const vis = layout(state);
    setVisible(controls, vis.slider);
    setVisible(jumpRow, vis.jumpButtons);
    setVisible(statsPanel, vis.statsPanel);
    setVisible(titleBar, vis.yearReadout);
    setVisible(compassCanvas, vis.compass);
    setVisible(poiPanel, vis.poiPanel);
    setVisible(banner, vis.errorBanner);
    setVisible(hideBtn, vis.hideToggle);
    hideBtn.textContent = state.uiHidden ? "Show UI" : "Hide UI";

    slider.value = String(state.sliderIndex);
    const year = displayedYear(state);
    yearLabel.textContent = String(year);
    if (state.mask && state.mask.level !== null && !state.loading) {
      levelLabel.textContent = `+${state.mask.level.toFixed(2)} m`;
    } else {
      levelLabel.textContent = "…";
    }

    if (state.mask && state.maskIndex !== drawnMaskIndex) {
      renderMask(floodCanvas, state.mask);
      drawnMaskIndex = state.maskIndex;
      const wet = countWet(state.mask);
      const total = state.mask.nrows * state.mask.ncols;
      const ha = (wet * meta.dem.cellsize * meta.dem.cellsize) / 10_000;
      statsBody.textContent =
        `${wet.toLocaleString()} of ${total.toLocaleString()} cells wet ` +
        `(${((100 * wet) / total).toFixed(1)}%, ${ha.toFixed(1)} ha)`;
      if (state.selectedPoi !== null) refreshPoiPanel(state);
    }
    if (state.error !== null) bannerText.textContent = state.error;
    if (state.selectedPoi !== drawnSelection) {
      renderMarkers(markerCanvas, meta, pois, state.selectedPoi);
      drawnSelection = state.selectedPoi;
      if (state.selectedPoi !== null) refreshPoiPanel(state);
    }
  }

  function requestIndex(index: number): void {
    update(withSlider(state, index));
    if (state.sliderIndex !== state.maskIndex) queue.request(state.sliderIndex);
  }

  slider.addEventListener("input", () => requestIndex(Number(slider.value)));
  for (const year of JUMP_YEARS) {
    el<HTMLButtonElement>(`jump-${year}`).addEventListener("click", () =>
      requestIndex(yearToSlider(year)),
    );
  }
  hideBtn.addEventListener("click", () => update(toggleUi(state)));
  poiClose.addEventListener("click", () => update(selectPoi(state, null)));
  retryBtn.addEventListener("click", () => {
    update({ ...state, error: null });
    queue.request(state.sliderIndex);
  });

  markerCanvas.addEventListener("click", (ev) => {
    const rect = markerCanvas.getBoundingClientRect();
    const px = ((ev.clientX - rect.left) / rect.width) * markerCanvas.width;
    const py = ((ev.clientY - rect.top) / rect.height) * markerCanvas.height;
    let hit: string | null = null;
    let best = 2.5 * MARKER_SCALE; // click tolerance in backing pixels
    for (const poi of pois) {
      const at = localToPixel(meta, poi.local.x, poi.local.y);
      const d = Math.hypot(at.px - px, at.py - py);
      if (d < best) {
        best = d;
        hit = poi.id;
      }
    }
    update(selectPoi(state, hit));
  });

  renderMarkers(markerCanvas, meta, pois, null);
  drawnSelection = null;
  update(state);
  queue.request(0);
}

void boot();
