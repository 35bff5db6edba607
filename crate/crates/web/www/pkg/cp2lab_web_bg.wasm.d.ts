/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const perturbed_slice: (a: number, b: number, c: number, d: number) => [number, number];
export const ruled_box: () => [number, number];
export const sphere_curve: (a: number) => [number, number];
export const tube_curve: (a: number) => [number, number];
export const tube_radius: () => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
