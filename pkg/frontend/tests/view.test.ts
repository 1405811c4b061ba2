// @vitest-environment jsdom
//
// Pure rendering: the DOM is a function of the server response and
// nothing else.

import { describe, expect, it } from 'vitest';
import type { SessionState } from '../src/api.js';
import { sierpinski } from '../src/spaces.js';
import { moveLabel, renderSession } from '../src/view.js';

const midGame: SessionState = {
  game_id: 'abc123',
  space_id: '2-9',
  kind: 'oo',
  horizon: 2,
  human: 'two',
  position: {
    inning: 0,
    accumulated: [],
    closure: [],
    pending: { type: 'pick', set: [1] },
  },
  history: [{ mover: 'one', move: { type: 'pick', set: [1] } }],
  legal_moves: [{ type: 'pick', set: [1] }],
  evaluation: 'one',
  done: false,
};

const finished: SessionState = {
  ...midGame,
  position: { inning: 2, accumulated: [1], closure: [0, 1], pending: null },
  legal_moves: [],
  done: true,
  winner: 'one',
};

function render(state: SessionState, hint = null as any): HTMLElement {
  const root = document.createElement('div');
  renderSession(root, sierpinski(), state, { submit: () => {}, hint: () => {} }, hint);
  return root;
}

describe('session rendering', () => {
  it('shows one palette button per legal move and the server evaluation', () => {
    const root = render(midGame);
    const buttons = root.querySelectorAll('.move-button');
    expect(buttons.length).toBe(midGame.legal_moves.length);
    expect(root.querySelector('.evaluation-badge')!.textContent).toBe(
      'player one wins from here',
    );
    expect(root.querySelector('.pending')!.textContent).toContain('{1}');
  });

  it('draws one node per point in the Hasse diagram', () => {
    const root = render(midGame);
    expect(root.querySelectorAll('circle').length).toBe(2);
    expect(root.querySelectorAll('line').length).toBe(1);
  });

  it('is deterministic: same state, same markup', () => {
    expect(render(midGame).innerHTML).toBe(render(midGame).innerHTML);
  });

  it('marks the hinted move', () => {
    const root = render(midGame, { type: 'pick', set: [1] });
    expect(root.querySelector('.move-button.hinted')).not.toBeNull();
  });

  it('shows the banner and no palette when done', () => {
    const root = render(finished);
    expect(root.querySelector('.banner')!.textContent).toBe('player one wins');
    expect(root.querySelectorAll('.move-button').length).toBe(0);
    const on = root.querySelectorAll('circle.on');
    expect(on.length).toBe(1);
  });
});

describe('move labels', () => {
  it('formats each move shape', () => {
    expect(moveLabel({ type: 'point', point: 2 })).toBe('point 2');
    expect(moveLabel({ type: 'pick', set: [0, 1] })).toBe('{0,1}');
    expect(moveLabel({ type: 'family', sets: [[1], [0, 1]] })).toBe('{ {1} {0,1} }');
  });
});
