// Scripted sessions against the real server: the UI-conformance gate.
//
// Spawns the Python workbench server, then plays a full open-open game
// on the Sierpinski space and a full point-open game on the discrete
// pair, checking at every step that what the client would display is
// exactly what the server said: evaluations, legal moves, hints,
// winners.  Finally replays the recorded request sequence and checks
// the responses are identical (the client holds no game state).

import { afterAll, beforeAll, describe, expect, it } from 'vitest';
import { spawn, type ChildProcess } from 'node:child_process';
import { ApiClient, type SessionState } from '../src/api.js';
import { discrete, sierpinski } from '../src/spaces.js';

const PORT = 8640 + Math.floor(Math.random() * 200);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
const client = new ApiClient(BASE);

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      await client.registerSpace(sierpinski());
      return;
    } catch {
      await new Promise((r) => setTimeout(r, 150));
    }
  }
  throw new Error('server did not come up');
}

beforeAll(async () => {
  server = spawn('python3', ['-m', 'topogame.cli', 'serve', '--port', String(PORT)], {
    cwd: '..',
    stdio: 'ignore',
  });
  await waitForServer();
});

afterAll(() => {
  server.kill();
});

describe('open-open on the Sierpinski space, human as two', () => {
  it('mirrors the solver at every step', async () => {
    const registered = await client.registerSpace(sierpinski());
    expect(registered.invariants.wl_degree).toBe(1);
    expect(registered.invariants.cellularity).toBe(1);

    const state = await client.newGame({
      space_id: registered.space_id,
      kind: 'oo',
      horizon: 1,
      human: 'two',
    });
    // engine (player one) opens with the open point; the palette offers
    // only the one legal shrink
    expect(state.position.pending).toEqual({ type: 'pick', set: [1] });
    expect(state.legal_moves).toEqual([{ type: 'pick', set: [1] }]);
    expect(state.evaluation).toBe('one');

    const hint = await client.hint(state.game_id);
    expect(hint.move).toEqual({ type: 'pick', set: [1] });

    const done = await client.submitMove(state.game_id, state.legal_moves[0]);
    expect(done.done).toBe(true);
    expect(done.winner).toBe('one');
    expect(done.position.accumulated).toEqual([1]);
    expect(done.position.closure).toEqual([0, 1]);
  });
});

describe('point-open on the discrete pair, human as one', () => {
  it('any point choice loses to the engine', async () => {
    const registered = await client.registerSpace(discrete(2));
    const state = await client.newGame({
      space_id: registered.space_id,
      kind: 'po',
      horizon: 1,
      human: 'one',
    });
    expect(state.position.pending).toBeNull();
    expect(state.evaluation).toBe('two');
    expect(state.legal_moves).toContainEqual({ type: 'point', point: 0 });
    expect(state.legal_moves).toContainEqual({ type: 'point', point: 1 });

    // the hint is the solver move for the side to move (the human here)
    const hint = await client.hint(state.game_id);
    expect(state.legal_moves).toContainEqual(hint.move);

    const done = await client.submitMove(state.game_id, { type: 'point', point: 0 });
    expect(done.done).toBe(true);
    expect(done.winner).toBe('two');
    // engine replied with the smallest covering open
    expect(done.engine_reply).toEqual({ type: 'pick', set: [0] });
  });
});

describe('statelessness', () => {
  it('replaying the request sequence reproduces identical views', async () => {
    const run = async (): Promise<SessionState[]> => {
      const registered = await client.registerSpace(discrete(2));
      const views: SessionState[] = [];
      let state = await client.newGame({
        space_id: registered.space_id,
        kind: 'po',
        horizon: 2,
        human: 'one',
      });
      views.push(state);
      state = await client.submitMove(state.game_id, { type: 'point', point: 0 });
      views.push(state);
      state = await client.submitMove(state.game_id, { type: 'point', point: 1 });
      views.push(state);
      return views;
    };
    const first = await run();
    const second = await run();
    const scrub = (views: SessionState[]) =>
      views.map((v) => ({ ...v, game_id: 'x' }));
    expect(scrub(first)).toEqual(scrub(second));
    // two innings suffice to name both points, so player one wins here
    // (the weak Lindelof degree of the discrete pair is 2) and the
    // evaluation says so from the start
    expect(first.map((v) => v.evaluation)).toEqual(['one', 'one', 'one']);
    expect(first[2].done).toBe(true);
    expect(first[2].winner).toBe('one');
  });

  it('GET /api/game returns the same view the last POST did', async () => {
    const registered = await client.registerSpace(sierpinski());
    const created = await client.newGame({
      space_id: registered.space_id,
      kind: 'sel-o-od',
      horizon: 1,
      human: 'two',
    });
    const fetched = await client.getState(created.game_id);
    expect(fetched).toEqual(created);
  });
});
