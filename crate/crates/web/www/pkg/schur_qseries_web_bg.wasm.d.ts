/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const determinant_vs_limit: (a: number, b: number) => [number, number];
export const identity_sides: (a: number, b: number) => [number, number];
export const schur_polynomials: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
