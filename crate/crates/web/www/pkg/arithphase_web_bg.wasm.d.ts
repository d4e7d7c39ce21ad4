/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_spectrum_free: (a: number, b: number) => void;
export const expectation_vs_beta: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const expectation_vs_q: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const ford_circles: (a: number) => [number, number, number, number];
export const spectrum: (a: number, b: number, c: number) => [number, number, number];
export const spectrum_fit_hi: (a: number) => number;
export const spectrum_fit_lo: (a: number) => number;
export const spectrum_freqs: (a: number) => [number, number];
export const spectrum_intercept: (a: number) => number;
export const spectrum_powers: (a: number) => [number, number];
export const spectrum_slope: (a: number) => number;
export const spectrum_slope_stderr: (a: number) => number;
export const tangent_neighbours: (a: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
