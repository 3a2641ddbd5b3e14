/* tslint:disable */
/* eslint-disable */

export class Analysis {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly amplitudes: string | undefined;
    readonly bent: boolean | undefined;
    readonly edges: Uint32Array;
    readonly graph6: string;
    /**
     * Decimal string, since the value can exceed 2^53.
     */
    readonly ms_number: string;
    readonly order: number;
    readonly plus_number: string;
    readonly rank: number;
    readonly readonce: string;
    /**
     * Present only for bipartite graphs.
     */
    readonly schmidt: number | undefined;
    readonly spectrum: string | undefined;
}

export class FamilyMember {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly closed_form: string;
    readonly computed: string;
    readonly edges: Uint32Array;
    readonly order: number;
}

/**
 * Everything the page shows about one graph.
 */
export function analyze(text: string): Analysis;

/**
 * Builds a family member from whitespace-separated parameters, e.g.
 * `family("complete-bipartite", "2 3")`, with both the closed form and the
 * general algorithm's value.
 */
export function family(name: string, params: string): FamilyMember;

export function local_complement(text: string, v: number): Uint32Array;

export function pivot(text: string, u: number, v: number): Uint32Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_analysis_free: (a: number, b: number) => void;
    readonly __wbg_familymember_free: (a: number, b: number) => void;
    readonly analysis_amplitudes: (a: number) => [number, number];
    readonly analysis_bent: (a: number) => number;
    readonly analysis_edges: (a: number) => [number, number];
    readonly analysis_graph6: (a: number) => [number, number];
    readonly analysis_ms_number: (a: number) => [number, number];
    readonly analysis_order: (a: number) => number;
    readonly analysis_plus_number: (a: number) => [number, number];
    readonly analysis_rank: (a: number) => number;
    readonly analysis_readonce: (a: number) => [number, number];
    readonly analysis_schmidt: (a: number) => number;
    readonly analysis_spectrum: (a: number) => [number, number];
    readonly analyze: (a: number, b: number) => [number, number, number];
    readonly family: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly familymember_closed_form: (a: number) => [number, number];
    readonly familymember_computed: (a: number) => [number, number];
    readonly familymember_edges: (a: number) => [number, number];
    readonly familymember_order: (a: number) => number;
    readonly local_complement: (a: number, b: number, c: number) => [number, number, number, number];
    readonly pivot: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
