/* tslint:disable */
/* eslint-disable */

/**
 * Periodogram with its octave-averaged log-log fit.
 */
export class Spectrum {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly fit_hi: number;
    readonly fit_lo: number;
    readonly freqs: Float64Array;
    readonly intercept: number;
    readonly powers: Float64Array;
    readonly slope: number;
    readonly slope_stderr: number;
}

export function expectation_vs_beta(q: number, points: number, window: string): Float64Array;

export function expectation_vs_q(beta: number, qmax: number, window: string): Float64Array;

export function ford_circles(order: number): Float64Array;

export function spectrum(sequence: string, samples: number): Spectrum;

export function tangent_neighbours(order: number): number;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_spectrum_free: (a: number, b: number) => void;
    readonly expectation_vs_beta: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly expectation_vs_q: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly ford_circles: (a: number) => [number, number, number, number];
    readonly spectrum: (a: number, b: number, c: number) => [number, number, number];
    readonly spectrum_fit_hi: (a: number) => number;
    readonly spectrum_fit_lo: (a: number) => number;
    readonly spectrum_freqs: (a: number) => [number, number];
    readonly spectrum_intercept: (a: number) => number;
    readonly spectrum_powers: (a: number) => [number, number];
    readonly spectrum_slope: (a: number) => number;
    readonly spectrum_slope_stderr: (a: number) => number;
    readonly tangent_neighbours: (a: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
