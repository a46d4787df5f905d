"""HTTP+JSON control service around the simulated arm.

Single-writer state machine: every mutation (command, estop, tick) runs
under one lock; reads take consistent snapshots. A background thread
advances simulated time in fixed 20 ms ticks while the server runs.
All wire angles are degrees, positions millimeters.
"""

from __future__ import annotations

import json
import math
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import sim
from .config import ArmConfig, config_document, default_config
from .forward import fk
from .transforms import CartesianTarget

TICK_SECONDS = 0.02


class ArmServer(ThreadingHTTPServer):
    """HTTP server owning the arm state, its lock, and the tick thread."""

    daemon_threads = True

    def __init__(self, address, config: ArmConfig | None = None):
        super().__init__(address, _Handler)
        self.config = default_config() if config is None else config
        self.lock = threading.Lock()
        self.state = sim.initial_state(self.config.servos, self.config.home)
        self._stop = threading.Event()
        self._ticker = threading.Thread(target=self._tick_loop, daemon=True)

    def start_ticker(self) -> None:
        self._ticker.start()

    def shutdown(self) -> None:
        self._stop.set()
        super().shutdown()
        if self._ticker.is_alive():
            self._ticker.join(timeout=2.0)

    def _tick_loop(self) -> None:
        while not self._stop.wait(TICK_SECONDS):
            with self.lock:
                self.state = sim.step(self.state, TICK_SECONDS, self.config.servos)

    # -- operations ------------------------------------------------------

    def snapshot_document(self) -> dict:
        with self.lock:
            state = self.state
        position = fk(self.config.links, state.current, self.config.joint_limits()).position
        return {
            "joints_deg": [math.degrees(a) for a in state.current],
            "goal_deg": [math.degrees(a) for a in state.goal],
            "position": {"x": position.x, "y": position.y, "z": position.z},
            "moving": state.moving,
            "last_clamp": _clamp_document(state.last_clamp),
            "sim_time": state.sim_time,
        }

    def command(self, target: CartesianTarget) -> sim.CommandOutcome:
        with self.lock:
            outcome = sim.command_target(
                self.state,
                target,
                self.config.links,
                self.config.limits,
                self.config.servos,
                domain=self.config.domain_mode,
                branch=self.config.branch_mode,
            )
            if outcome.accepted:
                self.state = outcome.state
        return outcome

    def emergency_stop(self) -> None:
        with self.lock:
            self.state = sim.estop(self.state)


def _clamp_document(report) -> dict | None:
    if report is None:
        return None
    return {
        "applied": [rule.value for rule in report.rules_applied],
        "original": {"x": report.original.x, "y": report.original.y, "z": report.original.z},
        "clamped": {"x": report.clamped.x, "y": report.clamped.y, "z": report.clamped.z},
    }


class _Handler(BaseHTTPRequestHandler):
    server: ArmServer
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self._cors()
        self.end_headers()
        self.wfile.write(body)

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/state":
            self._send(200, self.server.snapshot_document())
        elif self.path == "/api/config":
            self._send(200, config_document(self.server.config))
        else:
            self._send(404, {"error": f"no such resource {self.path}"})

    def do_POST(self):
        if self.path == "/api/target":
            self._post_target()
        elif self.path == "/api/estop":
            self.server.emergency_stop()
            self._send(200, {"stopped": True})
        else:
            self._send(404, {"error": f"no such resource {self.path}"})

    def _read_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        return json.loads(raw.decode())

    def _post_target(self):
        try:
            body = self._read_body()
            target = CartesianTarget(*(_finite_number(body, k) for k in ("x", "y", "z")))
        except (ValueError, UnicodeDecodeError) as exc:
            self._send(400, {"error": f"malformed body: {exc}"})
            return
        outcome = self.server.command(target)
        clamp_rules = [rule.value for rule in outcome.clamp.rules_applied] if outcome.clamp else []
        if outcome.accepted:
            self._send(200, {"accepted": True, "clamp": clamp_rules})
        else:
            self._send(422, {"accepted": False, "clamp": clamp_rules, "reason": outcome.reason})


def _finite_number(body: dict, key: str) -> float:
    if not isinstance(body, dict) or key not in body:
        raise ValueError(f"missing field {key!r}")
    value = body[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"field {key!r} must be a number")
    if not math.isfinite(value):
        raise ValueError(f"field {key!r} must be finite")
    return float(value)


def make_server(config: ArmConfig | None = None, host: str = "127.0.0.1", port: int = 8080) -> ArmServer:
    return ArmServer((host, port), config)


def serve_forever(config: ArmConfig | None = None, host: str = "127.0.0.1", port: int = 8080) -> None:
    """Run until interrupted; used by the CLI's serve command."""
    server = make_server(config, host, port)
    server.start_ticker()
    try:
        print(f"arm service listening on http://{host}:{server.server_address[1]}")
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.shutdown()
        server.server_close()
