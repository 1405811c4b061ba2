// Preorder matrices for the standard small spaces.
//
// These are input builders only (the relation is written out literally);
// the server validates them and owns every topological judgement.

import type { SpaceJson } from './api.js';

function matrix(n: number, fill: (i: number, j: number) => boolean): SpaceJson {
  const preorder: number[][] = [];
  for (let i = 0; i < n; i++) {
    const row: number[] = [];
    for (let j = 0; j < n; j++) {
      row.push(i === j || fill(i, j) ? 1 : 0);
    }
    preorder.push(row);
  }
  return { version: 1, points: n, preorder };
}

export function discrete(n: number): SpaceJson {
  return matrix(n, () => false);
}

export function indiscrete(n: number): SpaceJson {
  return matrix(n, () => true);
}

export function sierpinski(): SpaceJson {
  return matrix(2, (i, j) => i === 0 && j === 1);
}

export function chain(n: number): SpaceJson {
  return matrix(n, (i, j) => i < j);
}

export function fan(k: number): SpaceJson {
  return matrix(k + 1, (i, j) => i === 0 && j >= 1);
}

export const NAMED_SPACES: Record<string, () => SpaceJson> = {
  sierpinski: () => sierpinski(),
  'discrete(2)': () => discrete(2),
  'discrete(3)': () => discrete(3),
  'indiscrete(3)': () => indiscrete(3),
  'chain(3)': () => chain(3),
  'fan(2)': () => fan(2),
  'fan(3)': () => fan(3),
};
