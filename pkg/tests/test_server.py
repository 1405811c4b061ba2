"""HTTP JSON API: sessions, legality, evaluations, hints, recording."""

import json
import threading

import httpx
import pytest

from topogame.games import OPEN_OPEN, solve
from topogame.server import make_server
from topogame.space import space_to_json
from topogame.spacegen import discrete, sierpinski


@pytest.fixture()
def api(tmp_path):
    record = tmp_path / "games.jsonl"
    httpd = make_server(port=0, record_path=str(record))
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{httpd.server_address[1]}"
    client = httpx.Client(base_url=base, timeout=10)
    yield client, record
    client.close()
    httpd.shutdown()
    httpd.server_close()


def test_register_space_reports_invariants(api):
    client, _ = api
    doc = client.post("/api/space", json=space_to_json(sierpinski())).json()
    assert doc["points"] == 2
    assert doc["invariants"]["wl_degree"] == 1
    assert doc["invariants"]["cellularity"] == 1
    assert doc["space_id"]


def test_openopen_game_on_sierpinski_human_two(api):
    client, record = api
    space_doc = client.post("/api/space", json=space_to_json(sierpinski())).json()
    state = client.post(
        "/api/game",
        json={
            "space_id": space_doc["space_id"],
            "kind": "oo",
            "horizon": 1,
            "human": "two",
        },
    ).json()
    # engine is player one and opens with the open point
    assert state["position"]["pending"] == {"type": "pick", "set": [1]}
    assert state["legal_moves"] == [{"type": "pick", "set": [1]}]
    assert state["evaluation"] == "one"
    game = state["game_id"]
    hint = client.get(f"/api/game/{game}/hint").json()
    assert hint["move"] == {"type": "pick", "set": [1]}
    done = client.post(
        f"/api/game/{game}/move", json={"move": {"type": "pick", "set": [1]}}
    ).json()
    assert done["done"] is True
    assert done["winner"] == "one"
    assert done["position"]["accumulated"] == [1]
    assert done["position"]["closure"] == [0, 1]
    # transcript was recorded
    lines = record.read_text().strip().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0])["winner"] == "one"


def test_pointopen_game_on_discrete2_human_one(api):
    client, _ = api
    space_doc = client.post("/api/space", json=space_to_json(discrete(2))).json()
    state = client.post(
        "/api/game",
        json={
            "space_id": space_doc["space_id"],
            "kind": "po",
            "horizon": 1,
            "human": "one",
        },
    ).json()
    assert state["position"]["pending"] is None
    assert {"type": "point", "point": 0} in state["legal_moves"]
    # player two wins point-open on the discrete pair at horizon 1
    assert state["evaluation"] == "two"
    game = state["game_id"]
    done = client.post(
        f"/api/game/{game}/move", json={"move": {"type": "point", "point": 0}}
    ).json()
    assert done["done"] is True
    assert done["winner"] == "two"
    assert done["engine_reply"] == {"type": "pick", "set": [0]}


def test_evaluation_matches_solve(api):
    client, _ = api
    d3 = discrete(3)
    space_doc = client.post("/api/space", json=space_to_json(d3)).json()
    for horizon in (2, 3):
        state = client.post(
            "/api/game",
            json={
                "space_id": space_doc["space_id"],
                "kind": "oo",
                "horizon": horizon,
                "human": "two",
            },
        ).json()
        assert state["evaluation"] == solve(d3, OPEN_OPEN, horizon).winner.value


def test_illegal_move_rejected(api):
    client, _ = api
    space_doc = client.post("/api/space", json=space_to_json(sierpinski())).json()
    state = client.post(
        "/api/game",
        json={
            "space_id": space_doc["space_id"],
            "kind": "oo",
            "horizon": 1,
            "human": "two",
        },
    ).json()
    bad = client.post(
        f"/api/game/{state['game_id']}/move",
        json={"move": {"type": "pick", "set": [0, 1]}},
    )
    assert bad.status_code == 400
    assert "illegal" in bad.json()["error"]


def test_unknown_ids(api):
    client, _ = api
    assert client.get("/api/game/deadbeef").status_code == 400
    assert client.post("/api/game", json={"space_id": "nope", "kind": "oo", "horizon": 1}).status_code == 400
    assert client.get("/api/nothing").status_code == 404


def test_get_state_is_stable(api):
    client, _ = api
    space_doc = client.post("/api/space", json=space_to_json(discrete(2))).json()
    state = client.post(
        "/api/game",
        json={
            "space_id": space_doc["space_id"],
            "kind": "po",
            "horizon": 2,
            "human": "one",
        },
    ).json()
    game = state["game_id"]
    first = client.get(f"/api/game/{game}").json()
    second = client.get(f"/api/game/{game}").json()
    assert first == second


def test_interleaved_sessions_are_confined(api):
    client, _ = api
    sierp_id = client.post("/api/space", json=space_to_json(sierpinski())).json()["space_id"]
    d2_id = client.post("/api/space", json=space_to_json(discrete(2))).json()["space_id"]
    a = client.post(
        "/api/game",
        json={"space_id": sierp_id, "kind": "oo", "horizon": 1, "human": "two"},
    ).json()
    b = client.post(
        "/api/game",
        json={"space_id": d2_id, "kind": "po", "horizon": 2, "human": "one"},
    ).json()
    # moving in one game leaves the other untouched
    before = client.get(f"/api/game/{a['game_id']}").json()
    client.post(f"/api/game/{b['game_id']}/move", json={"move": {"type": "point", "point": 0}})
    after = client.get(f"/api/game/{a['game_id']}").json()
    assert before == after
    done_a = client.post(
        f"/api/game/{a['game_id']}/move", json={"move": {"type": "pick", "set": [1]}}
    ).json()
    assert done_a["winner"] == "one"
    state_b = client.get(f"/api/game/{b['game_id']}").json()
    assert state_b["done"] is False and state_b["position"]["inning"] == 1
