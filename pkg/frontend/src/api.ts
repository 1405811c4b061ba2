// Typed client for the workbench JSON API.
//
// The client carries no game logic: it forwards requests and hands back
// the server's state verbatim.  Every rule question (legality, winner,
// evaluation) is answered server-side.

export type PlayerName = 'one' | 'two';

export type MoveJson =
  | { type: 'family'; sets: number[][] }
  | { type: 'finsel'; sets: number[][] }
  | { type: 'pick'; set: number[] }
  | { type: 'point'; point: number };

export interface SpaceJson {
  version: 1;
  points: number;
  preorder: number[][];
}

export interface InvariantsJson {
  cellularity: number;
  density: number;
  pi_weight: number;
  pi_character: number[];
  wl_degree: number;
}

export interface RegisterSpaceResponse {
  space_id: string;
  points: number;
  invariants: InvariantsJson;
}

export interface PositionJson {
  inning: number;
  accumulated: number[];
  closure: number[];
  pending: MoveJson | null;
}

export interface HistoryEntry {
  mover: PlayerName;
  move: MoveJson;
}

export interface SessionState {
  game_id: string;
  space_id: string;
  kind: string;
  horizon: number;
  human: PlayerName;
  position: PositionJson;
  history: HistoryEntry[];
  legal_moves: MoveJson[];
  evaluation: PlayerName;
  done: boolean;
  winner?: PlayerName;
  engine_reply?: MoveJson;
}

export interface NewGameRequest {
  space_id: string;
  kind: string;
  horizon: number;
  human: PlayerName;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body.error ?? response.statusText);
  }
  return body as T;
}

export class ApiClient {
  constructor(private base: string) {}

  registerSpace(space: SpaceJson): Promise<RegisterSpaceResponse> {
    return request(`${this.base}/api/space`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(space),
    });
  }

  newGame(req: NewGameRequest): Promise<SessionState> {
    return request(`${this.base}/api/game`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(req),
    });
  }

  getState(gameId: string): Promise<SessionState> {
    return request(`${this.base}/api/game/${gameId}`);
  }

  submitMove(gameId: string, move: MoveJson): Promise<SessionState> {
    return request(`${this.base}/api/game/${gameId}/move`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ move }),
    });
  }

  hint(gameId: string): Promise<{ move: MoveJson }> {
    return request(`${this.base}/api/game/${gameId}/hint`);
  }
}
