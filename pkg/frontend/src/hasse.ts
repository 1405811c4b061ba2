// Hasse diagram of a specialization preorder, as inline SVG.
//
// Points are laid out in layers by longest chain below them (closed
// points at the bottom, open points higher), left to right by index, so
// the same space always renders identically.  Highlighted sets (the
// accumulated union, a candidate move) are drawn as filled nodes.

import type { SpaceJson } from './api.js';

export interface HasseLayout {
  layers: number[][]; // layer -> point indices, ascending
  covers: Array<[number, number]>; // [lower, upper] strict covering pairs
  positions: Map<number, { x: number; y: number }>;
}

function leq(space: SpaceJson, i: number, j: number): boolean {
  return space.preorder[i][j] === 1;
}

export function coveringPairs(space: SpaceJson): Array<[number, number]> {
  const n = space.points;
  const covers: Array<[number, number]> = [];
  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      if (i === j || !leq(space, i, j) || leq(space, j, i)) continue;
      let direct = true;
      for (let k = 0; k < n; k++) {
        if (k === i || k === j) continue;
        if (leq(space, i, k) && !leq(space, k, i) && leq(space, k, j) && !leq(space, j, k)) {
          direct = false;
          break;
        }
      }
      if (direct) covers.push([i, j]);
    }
  }
  return covers;
}

export function layout(space: SpaceJson, width = 320, rowHeight = 70): HasseLayout {
  const n = space.points;
  const height: number[] = new Array(n).fill(0);
  // longest strict chain below each point; n passes suffice
  for (let pass = 0; pass < n; pass++) {
    for (let j = 0; j < n; j++) {
      for (let i = 0; i < n; i++) {
        if (i !== j && leq(space, i, j) && !leq(space, j, i)) {
          height[j] = Math.max(height[j], height[i] + 1);
        }
      }
    }
  }
  const top = Math.max(...height, 0);
  const layers: number[][] = [];
  for (let h = 0; h <= top; h++) {
    layers.push(
      Array.from({ length: n }, (_, i) => i).filter((i) => height[i] === h),
    );
  }
  const positions = new Map<number, { x: number; y: number }>();
  layers.forEach((layer, h) => {
    layer.forEach((point, idx) => {
      positions.set(point, {
        x: ((idx + 1) * width) / (layer.length + 1),
        y: (top - h + 0.5) * rowHeight,
      });
    });
  });
  return { layers, covers: coveringPairs(space), positions };
}

export function renderHasseSvg(
  space: SpaceJson,
  highlighted: Set<number>,
  width = 320,
  rowHeight = 70,
): string {
  const { layers, covers, positions } = layout(space, width, rowHeight);
  const height = layers.length * rowHeight;
  const parts: string[] = [
    `<svg viewBox="0 0 ${width} ${height}" width="${width}" height="${height}" role="img">`,
  ];
  for (const [lo, hi] of covers) {
    const a = positions.get(lo)!;
    const b = positions.get(hi)!;
    parts.push(
      `<line x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}" stroke="#888" stroke-width="1.5"/>`,
    );
  }
  for (const [point, pos] of positions) {
    const on = highlighted.has(point);
    parts.push(
      `<circle class="pt${on ? ' on' : ''}" data-point="${point}" cx="${pos.x}" cy="${pos.y}" r="14" ` +
        `fill="${on ? '#2c7' : '#fff'}" stroke="#333" stroke-width="1.5"/>`,
      `<text x="${pos.x}" y="${pos.y + 4}" text-anchor="middle" font-size="12">${point}</text>`,
    );
  }
  parts.push('</svg>');
  return parts.join('');
}
