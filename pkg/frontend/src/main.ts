// DOM wiring: poll loop, target form, jog pad, banners, schematic views.

import { ApiClient } from "./api.js";
import {
  Axis,
  ConfigDocument,
  DEFAULT_JOG_STEP_MM,
  JOG_STEPS_MM,
  PendantModel,
  describeClamp,
  formatDeg,
  formatMm,
} from "./model.js";
import { paintSideView, paintTopView } from "./schematic.js";

const POLL_PERIOD_MS = 100;

const params = new URLSearchParams(window.location.search);
const serviceBase = params.get("service") ?? `http://${window.location.hostname || "localhost"}:8080`;

const api = new ApiClient(serviceBase);
const model = new PendantModel();
let config: ConfigDocument | null = null;
let commandInFlight = false;

const el = {
  status: document.getElementById("status") as HTMLSpanElement,
  banner: document.getElementById("banner") as HTMLDivElement,
  joints: document.getElementById("joints") as HTMLTableCellElement,
  goal: document.getElementById("goal") as HTMLTableCellElement,
  position: document.getElementById("position") as HTMLTableCellElement,
  moving: document.getElementById("moving") as HTMLTableCellElement,
  simTime: document.getElementById("sim-time") as HTMLTableCellElement,
  x: document.getElementById("target-x") as HTMLInputElement,
  y: document.getElementById("target-y") as HTMLInputElement,
  z: document.getElementById("target-z") as HTMLInputElement,
  form: document.getElementById("target-form") as HTMLFormElement,
  estop: document.getElementById("estop") as HTMLButtonElement,
  step: document.getElementById("jog-step") as HTMLSelectElement,
  jogPad: document.getElementById("jog-pad") as HTMLDivElement,
  side: document.getElementById("side-view") as HTMLCanvasElement,
  top: document.getElementById("top-view") as HTMLCanvasElement,
};

function setBanner(text: string, kind: "info" | "warn" | "error" | "none"): void {
  el.banner.textContent = text;
  el.banner.className = kind === "none" ? "banner hidden" : `banner ${kind}`;
}

function render(): void {
  el.status.textContent = model.status;
  el.status.className = `status ${model.status}`;
  const state = model.lastState;
  if (!state) return;
  el.joints.textContent = state.joints_deg.map(formatDeg).join("  ");
  el.goal.textContent = state.goal_deg.map(formatDeg).join("  ");
  const p = state.position;
  el.position.textContent = `(${formatMm(p.x)}, ${formatMm(p.y)}, ${formatMm(p.z)}) mm`;
  el.moving.textContent = state.moving ? "moving" : "idle";
  el.simTime.textContent = `${state.sim_time.toFixed(2)} s`;
  if (config) {
    paintSideView(el.side, state, config);
    paintTopView(el.top, state, config);
  }
}

async function poll(): Promise<void> {
  try {
    const doc = await api.getState();
    model.applyPoll(doc);
  } catch {
    model.applyPollFailure();
  }
  render();
}

async function submit(x: number, y: number, z: number): Promise<void> {
  if (commandInFlight) return;
  if (![x, y, z].every(Number.isFinite)) {
    setBanner("target must be three numbers", "error");
    return;
  }
  commandInFlight = true;
  try {
    const result = await api.postTarget({ x, y, z });
    if (!result.accepted) {
      setBanner(`rejected: ${result.reason ?? "unknown reason"}`, "error");
    } else if (result.clamp.length > 0) {
      const doc = await api.getState();
      if (model.applyPoll(doc) && doc.last_clamp) {
        setBanner(describeClamp(doc.last_clamp), "warn");
      } else {
        setBanner(`clamped [${result.clamp.join(", ")}]`, "warn");
      }
    } else {
      setBanner("accepted", "info");
    }
  } catch {
    setBanner("service unreachable, command not delivered", "error");
  } finally {
    commandInFlight = false;
    render();
  }
}

function wireForm(): void {
  el.form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submit(Number(el.x.value), Number(el.y.value), Number(el.z.value));
  });
  el.estop.addEventListener("click", () => {
    void api.estop().catch(() => setBanner("service unreachable, estop not delivered", "error"));
  });
}

function wireJog(): void {
  for (const step of JOG_STEPS_MM) {
    const option = document.createElement("option");
    option.value = String(step);
    option.textContent = `${step} mm`;
    option.selected = step === DEFAULT_JOG_STEP_MM;
    el.step.appendChild(option);
  }
  el.step.addEventListener("change", () => {
    model.jogStep = Number(el.step.value);
  });
  const axes: [Axis, 1 | -1, string][] = [
    ["X", 1, "+X"], ["X", -1, "−X"],
    ["Y", 1, "+Y"], ["Y", -1, "−Y"],
    ["Z", 1, "+Z"], ["Z", -1, "−Z"],
  ];
  for (const [axis, direction, label] of axes) {
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = label;
    button.addEventListener("click", () => {
      const target = model.jogTarget(axis, direction);
      if (!target) {
        setBanner("no known position yet, cannot jog", "error");
        return;
      }
      void submit(target.x, target.y, target.z);
    });
    el.jogPad.appendChild(button);
  }
}

async function start(): Promise<void> {
  wireForm();
  wireJog();
  try {
    config = await api.getConfig();
  } catch {
    setBanner(`cannot load config from ${serviceBase} (append ?service=http://host:port to override)`, "error");
  }
  await poll();
  const state = model.lastState;
  if (state) {
    el.x.value = state.position.x.toFixed(1);
    el.y.value = state.position.y.toFixed(1);
    el.z.value = state.position.z.toFixed(1);
  }
  window.setInterval(() => void poll(), POLL_PERIOD_MS);
}

void start();
