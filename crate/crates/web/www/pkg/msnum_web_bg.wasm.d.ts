/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_analysis_free: (a: number, b: number) => void;
export const __wbg_familymember_free: (a: number, b: number) => void;
export const analysis_amplitudes: (a: number) => [number, number];
export const analysis_bent: (a: number) => number;
export const analysis_edges: (a: number) => [number, number];
export const analysis_graph6: (a: number) => [number, number];
export const analysis_ms_number: (a: number) => [number, number];
export const analysis_order: (a: number) => number;
export const analysis_plus_number: (a: number) => [number, number];
export const analysis_rank: (a: number) => number;
export const analysis_readonce: (a: number) => [number, number];
export const analysis_schmidt: (a: number) => number;
export const analysis_spectrum: (a: number) => [number, number];
export const analyze: (a: number, b: number) => [number, number, number];
export const family: (a: number, b: number, c: number, d: number) => [number, number, number];
export const familymember_closed_form: (a: number) => [number, number];
export const familymember_computed: (a: number) => [number, number];
export const familymember_edges: (a: number) => [number, number];
export const familymember_order: (a: number) => number;
export const local_complement: (a: number, b: number, c: number) => [number, number, number, number];
export const pivot: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
