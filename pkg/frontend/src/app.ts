// Browser entry point: pick a space, a game and a side, then play the
// engine.  Every click round-trips to the server; the page is a viewer.

import { ApiClient, type MoveJson, type PlayerName, type SessionState, type SpaceJson } from './api.js';
import { NAMED_SPACES } from './spaces.js';
import { renderSession } from './view.js';

const client = new ApiClient('');

interface AppState {
  space: SpaceJson | null;
  session: SessionState | null;
  hint: MoveJson | null;
}

const app: AppState = { space: null, session: null, hint: null };

function board(): HTMLElement {
  return document.getElementById('board')!;
}

function redraw(): void {
  if (!app.space || !app.session) return;
  renderSession(board(), app.space, app.session, {
    submit: async (move) => {
      if (!app.session) return;
      app.session = await client.submitMove(app.session.game_id, move);
      app.hint = null;
      redraw();
    },
    hint: async () => {
      if (!app.session) return;
      app.hint = (await client.hint(app.session.game_id)).move;
      redraw();
    },
  }, app.hint);
}

async function start(): Promise<void> {
  const spaceName = (document.getElementById('space') as HTMLSelectElement).value;
  const kind = (document.getElementById('kind') as HTMLSelectElement).value;
  const horizon = Number((document.getElementById('horizon') as HTMLInputElement).value);
  const human = (document.getElementById('side') as HTMLSelectElement).value as PlayerName;
  app.space = NAMED_SPACES[spaceName]();
  const registered = await client.registerSpace(app.space);
  const info = document.getElementById('invariants')!;
  info.textContent = JSON.stringify(registered.invariants);
  app.session = await client.newGame({
    space_id: registered.space_id,
    kind,
    horizon,
    human,
  });
  app.hint = null;
  redraw();
}

export function wire(): void {
  const select = document.getElementById('space') as HTMLSelectElement;
  for (const name of Object.keys(NAMED_SPACES)) {
    const option = document.createElement('option');
    option.value = name;
    option.textContent = name;
    select.append(option);
  }
  document.getElementById('start')!.addEventListener('click', () => void start());
}

if (typeof document !== 'undefined' && document.getElementById('start')) {
  wire();
}
