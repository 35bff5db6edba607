/* tslint:disable */
/* eslint-disable */

/**
 * Deficit on an `n × n` grid over the ruled box's `(u, v)` at fixed `θ`
 * for the perturbed chart; row-major in `u`, NaN where evaluation failed.
 */
export function perturbed_slice(epsilon: number, seed: number, theta: number, n: number): Float64Array;

/**
 * Bounds of the perturbed chart's box as `[u_lo, u_hi, v_lo, v_hi, θ_lo, θ_hi]`.
 */
export function ruled_box(): Float64Array;

/**
 * `n` samples of the geodesic sphere family as `[r, deficit, k₁, k₂, k₃]`
 * records, with `r` spanning `(0, π/2)`.
 */
export function sphere_curve(n: number): Float64Array;

/**
 * `n` samples `[r, c(r)]` of the tube condition on `(0, π/4)`; its root is
 * the tube radius.
 */
export function tube_curve(n: number): Float64Array;

/**
 * The tube radius found by bisection, or NaN.
 */
export function tube_radius(): number;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly perturbed_slice: (a: number, b: number, c: number, d: number) => [number, number];
    readonly ruled_box: () => [number, number];
    readonly sphere_curve: (a: number) => [number, number];
    readonly tube_curve: (a: number) => [number, number];
    readonly tube_radius: () => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
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
