// Rendering a session: the view is a pure function of the last server
// response.  No legality or evaluation is computed here; the palette
// offers exactly the server's legal moves and the badge repeats the
// server's evaluation.

import type { MoveJson, SessionState, SpaceJson } from './api.js';
import { renderHasseSvg } from './hasse.js';

export function moveLabel(move: MoveJson): string {
  switch (move.type) {
    case 'point':
      return `point ${move.point}`;
    case 'pick':
      return `{${move.set.join(',')}}`;
    case 'family':
    case 'finsel':
      return `{ ${move.sets.map((s) => `{${s.join(',')}}`).join(' ')} }`;
  }
}

export function movesEqual(a: MoveJson, b: MoveJson): boolean {
  return JSON.stringify(a) === JSON.stringify(b);
}

export interface ViewHandlers {
  submit: (move: MoveJson) => void;
  hint: () => void;
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderSession(
  root: HTMLElement,
  space: SpaceJson,
  state: SessionState,
  handlers: ViewHandlers,
  hintMove: MoveJson | null = null,
): void {
  root.textContent = '';

  const header = el('div', 'header');
  header.append(
    el('span', 'kind', `${state.kind} · horizon ${state.horizon} · you are player ${state.human}`),
  );
  const badge = el('span', 'evaluation-badge', `player ${state.evaluation} wins from here`);
  header.append(badge);
  root.append(header);

  const accumulated = new Set(state.position.accumulated);
  const diagram = el('div', 'hasse');
  diagram.innerHTML = renderHasseSvg(space, accumulated);
  root.append(diagram);

  const union = el('div', 'accumulated');
  union.append(
    el('span', 'union', `union {${state.position.accumulated.join(',')}}`),
    el('span', 'closure', `closure {${state.position.closure.join(',')}}`),
  );
  root.append(union);

  if (state.position.pending) {
    root.append(el('div', 'pending', `engine played ${moveLabel(state.position.pending)}`));
  }

  const history = el('ol', 'history');
  for (const entry of state.history) {
    history.append(el('li', `mover-${entry.mover}`, `${entry.mover}: ${moveLabel(entry.move)}`));
  }
  root.append(history);

  if (state.done) {
    root.append(el('div', 'banner', `player ${state.winner} wins`));
    return;
  }

  const palette = el('div', 'palette');
  for (const move of state.legal_moves) {
    const button = el('button', 'move-button', moveLabel(move)) as HTMLButtonElement;
    if (hintMove && movesEqual(move, hintMove)) {
      button.classList.add('hinted');
    }
    button.addEventListener('click', () => handlers.submit(move));
    palette.append(button);
  }
  root.append(palette);

  const hintButton = el('button', 'hint-button', 'hint') as HTMLButtonElement;
  hintButton.addEventListener('click', () => handlers.hint());
  root.append(hintButton);
}
