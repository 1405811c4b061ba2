"""Local JSON API for interactive play against the exact solver.

All rules live here on the server: sessions validate every human move
against the legal move set, the engine side plays the solver strategy,
and every response carries the solver's winner-from-here evaluation so a
client never has to understand the games.  Sessions are in-memory only
and identified by opaque tokens; the server binds loopback by default.
"""

from __future__ import annotations

import json
import re
import secrets
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import invariants
from .games import (
    GameError,
    GameKind,
    Move,
    Player,
    Solver,
    Transcript,
    _solver,
    credit,
    is_legal,
    judge,
    move_from_json,
    move_to_json,
    one_moves,
    parse_kind,
    two_moves,
)
from .space import FiniteSpace, SpaceError, pointset_to_json, space_from_json
from .spacegen import space_id


class SessionError(Exception):
    pass


class GameSession:
    """One human-versus-engine game; all state confined to the instance.

    The engine side plays the solver strategy; evaluations come from the
    same solver, so a client displaying them mirrors ``solve`` exactly.
    """

    def __init__(
        self,
        game_id: str,
        space: FiniteSpace,
        space_key: str,
        kind: GameKind,
        horizon: int,
        human: Player,
    ):
        if horizon < 1:
            raise SessionError("horizon must be >= 1")
        self.game_id = game_id
        self.space = space
        self.space_key = space_key
        self.kind = kind
        self.horizon = horizon
        self.human = human
        self.engine = human.other()
        self.solver: Solver = _solver(space, kind, "reduced")
        self.engine_strategy = self.solver.strategy(self.engine, horizon)
        self.engine_state = self.engine_strategy.initial_state()
        self.inning = 0
        self.accumulated = 0
        self.pending: Move | None = None
        self.history: list[tuple[Player, Move]] = []
        self.last_engine_reply: Move | None = None
        if self.engine is Player.ONE:
            self._engine_open_inning()

    # -- engine turns -------------------------------------------------------

    def _engine_open_inning(self) -> None:
        move = self.engine_strategy.choose(self.engine_state, None)
        self.pending = move
        self.history.append((Player.ONE, move))

    def _finish_inning(self, one_move: Move, two_move: Move) -> None:
        self.accumulated |= credit(self.kind, one_move, two_move)
        self.engine_state = self.engine_strategy.advance(
            self.engine_state, one_move, two_move
        )
        self.inning += 1
        self.pending = None
        if not self.done and self.engine is Player.ONE:
            self._engine_open_inning()

    @property
    def done(self) -> bool:
        return self.inning >= self.horizon

    @property
    def winner(self) -> Player | None:
        if not self.done:
            return None
        return judge(self.space, self.kind, self.accumulated)

    def human_to_move(self) -> bool:
        if self.done:
            return False
        if self.human is Player.ONE:
            return self.pending is None
        return self.pending is not None

    def apply_human_move(self, move: Move) -> None:
        if self.done:
            raise SessionError("the game is over")
        if not self.human_to_move():
            raise SessionError("not the human's turn")
        self.last_engine_reply = None
        if self.human is Player.ONE:
            if not is_legal(self.space, self.kind, None, move, Player.ONE):
                raise SessionError("illegal move")
            self.pending = move
            self.history.append((Player.ONE, move))
            reply = self.engine_strategy.choose(self.engine_state, move)
            self.history.append((Player.TWO, reply))
            self.last_engine_reply = reply
            self._finish_inning(move, reply)
        else:
            assert self.pending is not None
            if not is_legal(self.space, self.kind, self.pending, move, Player.TWO):
                raise SessionError("illegal move")
            offer = self.pending
            self.history.append((Player.TWO, move))
            self._finish_inning(offer, move)

    # -- views ---------------------------------------------------------------

    def legal_moves_now(self) -> list[Move]:
        if self.done or not self.human_to_move():
            return []
        if self.human is Player.ONE:
            return list(one_moves(self.space, self.kind))
        assert self.pending is not None
        return list(two_moves(self.space, self.kind, self.pending))

    def evaluation(self) -> Player:
        """Winner from the current position under optimal play."""
        remaining = self.horizon - self.inning
        if self.done:
            winner = self.winner
            assert winner is not None
            return winner
        if self.pending is None:
            return self.solver.value(remaining, self.accumulated)
        return self.solver.pending_value(remaining, self.accumulated, self.pending)

    def hint(self) -> Move:
        """The solver move for the side to move now."""
        if self.done:
            raise SessionError("the game is over")
        remaining = self.horizon - self.inning
        if self.pending is None:
            return self.solver.best_one_move(remaining, self.accumulated)
        return self.solver.best_reply(remaining, self.accumulated, self.pending)

    def transcript(self) -> Transcript:
        if not self.done:
            raise SessionError("the game is not over")
        return Transcript(
            self.kind,
            self.horizon,
            tuple(m for _, m in self.history),
            self.accumulated,
            judge(self.space, self.kind, self.accumulated),
        )

    def state_json(self, include_engine_reply: bool = False) -> dict:
        doc = {
            "game_id": self.game_id,
            "space_id": self.space_key,
            "kind": self.kind.label(),
            "horizon": self.horizon,
            "human": self.human.value,
            "position": {
                "inning": self.inning,
                "accumulated": pointset_to_json(self.accumulated),
                "closure": pointset_to_json(self.space.closure(self.accumulated)),
                "pending": move_to_json(self.pending) if self.pending else None,
            },
            "history": [
                {"mover": mover.value, "move": move_to_json(move)}
                for mover, move in self.history
            ],
            "legal_moves": [move_to_json(m) for m in self.legal_moves_now()],
            "evaluation": self.evaluation().value,
            "done": self.done,
        }
        if self.done:
            winner = self.winner
            assert winner is not None
            doc["winner"] = winner.value
        if include_engine_reply and self.last_engine_reply is not None:
            doc["engine_reply"] = move_to_json(self.last_engine_reply)
        return doc


class WorkbenchService:
    """Space registry plus game sessions behind a lock."""

    def __init__(self, record_path: str | None = None):
        self.spaces: dict[str, FiniteSpace] = {}
        self.sessions: dict[str, GameSession] = {}
        self.lock = threading.Lock()
        self.record_path = record_path

    def register_space(self, doc: dict) -> dict:
        space = space_from_json(doc)
        key = space_id(space)
        with self.lock:
            self.spaces[key] = space
        return {
            "space_id": key,
            "points": space.n,
            "invariants": invariants.report(space).to_json(),
        }

    def new_game(self, doc: dict) -> dict:
        key = doc.get("space_id")
        with self.lock:
            space = self.spaces.get(key)
        if space is None:
            raise SessionError(f"unknown space_id {key!r}")
        kind = parse_kind(doc["kind"])
        horizon = int(doc["horizon"])
        human = Player(doc.get("human", "one"))
        game_id = secrets.token_hex(8)
        session = GameSession(game_id, space, key, kind, horizon, human)
        with self.lock:
            self.sessions[game_id] = session
        return session.state_json()

    def get_session(self, game_id: str) -> GameSession:
        with self.lock:
            session = self.sessions.get(game_id)
        if session is None:
            raise SessionError(f"unknown game {game_id!r}")
        return session

    def submit_move(self, game_id: str, doc: dict) -> dict:
        session = self.get_session(game_id)
        move = move_from_json(doc["move"])
        with self.lock:
            session.apply_human_move(move)
            state = session.state_json(include_engine_reply=True)
            if session.done and self.record_path:
                with open(self.record_path, "a", encoding="utf-8") as fh:
                    fh.write(json.dumps(session.transcript().to_json()) + "\n")
        return state


_ROUTES = [
    (re.compile(r"^/api/space$"), "space"),
    (re.compile(r"^/api/game$"), "game"),
    (re.compile(r"^/api/game/([0-9a-f]+)/move$"), "move"),
    (re.compile(r"^/api/game/([0-9a-f]+)/hint$"), "hint"),
    (re.compile(r"^/api/game/([0-9a-f]+)$"), "state"),
]


class _Handler(BaseHTTPRequestHandler):
    service: WorkbenchService

    def log_message(self, fmt, *args):
        pass

    def _send(self, code: int, doc: dict) -> None:
        body = json.dumps(doc).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length", "0"))
        if length == 0:
            return {}
        return json.loads(self.rfile.read(length))

    def _dispatch(self, method: str) -> None:
        for pattern, name in _ROUTES:
            match = pattern.match(self.path)
            if not match:
                continue
            try:
                if name == "space" and method == "POST":
                    return self._send(200, self.service.register_space(self._body()))
                if name == "game" and method == "POST":
                    return self._send(200, self.service.new_game(self._body()))
                if name == "move" and method == "POST":
                    return self._send(
                        200, self.service.submit_move(match.group(1), self._body())
                    )
                if name == "hint" and method == "GET":
                    session = self.service.get_session(match.group(1))
                    return self._send(200, {"move": move_to_json(session.hint())})
                if name == "state" and method == "GET":
                    session = self.service.get_session(match.group(1))
                    return self._send(200, session.state_json())
            except (SessionError, SpaceError, GameError, KeyError, ValueError) as exc:
                return self._send(400, {"error": str(exc)})
            return self._send(405, {"error": f"{method} not allowed on {self.path}"})
        return self._send(404, {"error": f"no such endpoint {self.path}"})

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")


def make_server(
    host: str = "127.0.0.1", port: int = 0, record_path: str | None = None
) -> ThreadingHTTPServer:
    service = WorkbenchService(record_path)
    handler = type("BoundHandler", (_Handler,), {"service": service})
    return ThreadingHTTPServer((host, port), handler)


def serve_forever(host: str, port: int, record_path: str | None = None) -> None:
    httpd = make_server(host, port, record_path)
    actual = httpd.server_address[1]
    print(f"serving on http://{host}:{actual}")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
