"""HTTP service tests against a live server on an ephemeral port."""

import math
import threading
import time

import httpx
import pytest

from armkin import default_config, dumps_config, parse_config
from armkin.service import make_server


@pytest.fixture
def fast_config():
    # crank servo speed so motion converges quickly under the 20 ms tick
    text = "\n".join(
        f"servos.{name}.max_velocity_deg_s = 100000.0" for name in ("waist", "shoulder", "elbow")
    )
    return parse_config(text)


@pytest.fixture
def server(fast_config):
    srv = make_server(fast_config, host="127.0.0.1", port=0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    srv.start_ticker()
    yield srv
    srv.shutdown()
    srv.server_close()
    thread.join(timeout=2.0)


@pytest.fixture
def client(server):
    base = f"http://127.0.0.1:{server.server_address[1]}"
    with httpx.Client(base_url=base, timeout=5.0) as c:
        yield c


def wait_until(predicate, timeout=5.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        if predicate():
            return True
        time.sleep(0.01)
    return False


class TestState:
    def test_fresh_state_document(self, client, fast_config):
        doc = client.get("/api/state").json()
        assert set(doc) == {"joints_deg", "goal_deg", "position", "moving", "last_clamp", "sim_time"}
        home_deg = [math.degrees(a) for a in fast_config.home]
        assert doc["joints_deg"] == pytest.approx(home_deg)
        assert doc["moving"] is False
        assert doc["last_clamp"] is None

    def test_position_matches_fk_of_joints(self, client, fast_config):
        from armkin import JointAngles, fk

        doc = client.get("/api/state").json()
        q = JointAngles(*(math.radians(d) for d in doc["joints_deg"]))
        expected = fk(fast_config.links, q, fast_config.joint_limits()).position
        assert doc["position"]["x"] == pytest.approx(expected.x, abs=1e-9)
        assert doc["position"]["y"] == pytest.approx(expected.y, abs=1e-9)
        assert doc["position"]["z"] == pytest.approx(expected.z, abs=1e-9)

    def test_sim_time_monotonic(self, client):
        times = []
        for _ in range(5):
            times.append(client.get("/api/state").json()["sim_time"])
            time.sleep(0.03)
        assert times == sorted(times)
        assert times[-1] > times[0]

    def test_concurrent_snapshots_consistent(self, client):
        docs = []
        errors = []

        def poll():
            try:
                for _ in range(10):
                    docs.append(client.get("/api/state").json())
            except Exception as exc:  # noqa: BLE001
                errors.append(exc)

        threads = [threading.Thread(target=poll) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        for doc in docs:
            assert len(doc["joints_deg"]) == 3


class TestTarget:
    def test_clamped_target_accepted(self, client):
        response = client.post("/api/target", json={"x": 0, "y": 0, "z": -75})
        assert response.status_code == 200
        body = response.json()
        assert body["accepted"] is True
        assert body["clamp"] == ["Z_FLOOR"]
        assert wait_until(lambda: client.get("/api/state").json()["moving"] is False)
        doc = client.get("/api/state").json()
        assert doc["last_clamp"]["applied"] == ["Z_FLOOR"]
        assert doc["last_clamp"]["clamped"]["z"] == -60.0
        assert doc["position"]["z"] == pytest.approx(-60.0, abs=1e-6)

    def test_motion_then_convergence(self, client):
        # y < 0 keeps the X guard rules out of play
        before = client.get("/api/state").json()["position"]
        response = client.post("/api/target", json={"x": 90.0, "y": -10.0, "z": -20.0})
        assert response.status_code == 200
        assert response.json()["clamp"] == []
        assert wait_until(lambda: not client.get("/api/state").json()["moving"])
        after = client.get("/api/state").json()["position"]
        assert math.dist(
            (after["x"], after["y"], after["z"]), (90.0, -10.0, -20.0)
        ) < 1e-3
        assert after != before

    def test_unreachable_is_422_with_reason(self, client):
        response = client.post("/api/target", json={"x": 0, "y": -400, "z": 0})
        assert response.status_code == 422
        body = response.json()
        assert body["accepted"] is False
        assert "a2+a3" in body["reason"]

    def test_rejection_leaves_state_alone(self, client):
        before = client.get("/api/state").json()
        client.post("/api/target", json={"x": 0, "y": -400, "z": 0})
        after = client.get("/api/state").json()
        assert after["joints_deg"] == before["joints_deg"]
        assert after["goal_deg"] == before["goal_deg"]
        assert after["position"] == before["position"]

    def test_malformed_body_is_400(self, client):
        assert client.post("/api/target", json={"x": "abc", "y": 0, "z": 0}).status_code == 400
        assert client.post("/api/target", json={"x": 1, "y": 2}).status_code == 400
        assert client.post("/api/target", json=[1, 2, 3]).status_code == 400
        assert client.post("/api/target", content=b"{not json", headers={"Content-Type": "application/json"}).status_code == 400
        assert client.post("/api/target", json={"x": True, "y": 0, "z": 0}).status_code == 400

    def test_serialized_commands_last_one_wins(self, client, fast_config):
        from armkin import CartesianTarget, ik

        results = []

        def send(x):
            results.append(client.post("/api/target", json={"x": x, "y": -20.0, "z": -30.0}).status_code)

        threads = [threading.Thread(target=send, args=(x,)) for x in (80.0, 90.0, 100.0)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert results == [200, 200, 200]
        assert wait_until(lambda: not client.get("/api/state").json()["moving"])
        goal = client.get("/api/state").json()["goal_deg"]
        solutions = [
            [math.degrees(a) for a in ik(fast_config.links, CartesianTarget(x, -20.0, -30.0)).angles]
            for x in (80.0, 90.0, 100.0)
        ]
        assert any(goal == pytest.approx(sol) for sol in solutions)


class TestEstop:
    def test_estop_halts_motion(self, server, client):
        # slow the servos down via a fresh slow server? simpler: command then estop fast
        client.post("/api/target", json={"x": 100.0, "y": -40.0, "z": 0.0})
        response = client.post("/api/estop")
        assert response.status_code == 200
        assert response.json() == {"stopped": True}
        doc = client.get("/api/state").json()
        assert doc["moving"] is False
        assert doc["goal_deg"] == doc["joints_deg"]

    def test_estop_idle_noop_then_resume(self, client):
        client.post("/api/estop")
        doc = client.get("/api/state").json()
        assert doc["moving"] is False
        response = client.post("/api/target", json={"x": 85.0, "y": 0.0, "z": -25.0})
        assert response.status_code == 200
        assert wait_until(lambda: not client.get("/api/state").json()["moving"])


class TestConfigEndpoint:
    def test_config_document(self, client):
        doc = client.get("/api/config").json()
        assert doc["limits"]["z_floor"] == -60.0
        assert doc["links"]["a2"] == 100.0
        assert set(doc["servos"]) == {"waist", "shoulder", "elbow"}

    def test_stable_across_polls(self, client):
        assert client.get("/api/config").json() == client.get("/api/config").json()

    def test_modified_config_reflected(self, fast_config):
        from dataclasses import replace

        from armkin import WorkspaceLimits

        config = replace(fast_config, limits=WorkspaceLimits(z_floor=-30.0))
        srv = make_server(config, port=0)
        thread = threading.Thread(target=srv.serve_forever, daemon=True)
        thread.start()
        try:
            with httpx.Client(base_url=f"http://127.0.0.1:{srv.server_address[1]}", timeout=5.0) as c:
                assert c.get("/api/config").json()["limits"]["z_floor"] == -30.0
        finally:
            srv.shutdown()
            srv.server_close()
            thread.join(timeout=2.0)


class TestCors:
    def test_preflight_and_headers(self, client):
        response = client.options("/api/target")
        assert response.status_code == 204
        assert response.headers["Access-Control-Allow-Origin"] == "*"
        response = client.get("/api/state")
        assert response.headers["Access-Control-Allow-Origin"] == "*"


class TestRouting:
    def test_unknown_path_404(self, client):
        assert client.get("/api/nothing").status_code == 404
        assert client.post("/api/nothing").status_code == 404
