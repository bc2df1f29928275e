/**
 * Coalescing fetch queue for mask requests during slider drags.
 *
 * Contract: at most one request in flight; while one is out, newer
 * indices overwrite the pending slot instead of stacking; responses for
 * indices that are no longer the latest request are discarded. Dragging
 * 0..79 therefore costs a handful of fetches and always settles on 79.
 */

export type MaskFetcher<M> = (index: number) => Promise<M>;

export interface QueueSink<M> {
  apply(index: number, mask: M): void;
  fail(index: number, error: unknown): void;
}

export class MaskFetchQueue<M> {
  private fetcher: MaskFetcher<M>;
  private sink: QueueSink<M>;
  private inFlight: number | null = null;
  private pending: number | null = null;
  private latest = -1;

  constructor(fetcher: MaskFetcher<M>, sink: QueueSink<M>) {
    this.fetcher = fetcher;
    this.sink = sink;
  }

  /** True while a fetch is outstanding. */
  get busy(): boolean {
    return this.inFlight !== null;
  }

  request(index: number): void {
    this.latest = index;
    if (this.inFlight !== null) {
      this.pending = index; // coalesce: only the newest waits
      return;
    }
    this.launch(index);
  }

  private launch(index: number): void {
    this.inFlight = index;
    this.fetcher(index).then(
      (mask) => this.settle(index, mask, null),
      (err: unknown) => this.settle(index, null, err ?? new Error("fetch failed")),
    );
  }

  private settle(index: number, mask: M | null, err: unknown): void {
    this.inFlight = null;
    const next = this.pending;
    this.pending = null;
    if (index === this.latest) {
      // current response; pending (if set) equals latest, so nothing to chase
      if (err !== null) this.sink.fail(index, err);
      else this.sink.apply(index, mask as M);
      return;
    }
    // stale response: drop it and chase the newest request
    if (next !== null) this.launch(next);
  }
}
