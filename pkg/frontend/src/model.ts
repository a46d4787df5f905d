// Wire types for the arm service and the pendant's view-model logic.
// All kinematics numbers displayed by the pendant come from the server;
// this module only tracks, never recomputes, them.

export interface Vec3 {
  x: number;
  y: number;
  z: number;
}

export interface ClampDocument {
  applied: string[];
  original: Vec3;
  clamped: Vec3;
}

export interface StateDocument {
  joints_deg: number[];
  goal_deg: number[];
  position: Vec3;
  moving: boolean;
  last_clamp: ClampDocument | null;
  sim_time: number;
}

export interface ServoDocument {
  min_deg: number;
  max_deg: number;
  max_velocity_deg_s: number;
  pulse_min_us: number;
  pulse_max_us: number;
}

export interface ConfigDocument {
  links: { a0: number; a1: number; a2: number; a3: number };
  limits: {
    z_floor: number;
    x_min_when_y_negative: number;
    x_threshold_when_y_positive: number;
    x_clamp_when_y_positive: number;
  };
  servos: Record<string, ServoDocument>;
  home_deg: Record<string, number>;
  domain_mode: string;
  branch_mode: string;
}

export interface TargetResponse {
  accepted: boolean;
  clamp: string[];
  reason?: string;
}

export type Axis = "X" | "Y" | "Z";

export type ConnectionStatus = "connecting" | "connected" | "stale" | "disconnected";

export const JOG_STEPS_MM = [1, 5, 10] as const;
export const DEFAULT_JOG_STEP_MM = 5;

/** Two consecutive poll failures flip the status to stale. */
export const STALE_AFTER_FAILURES = 2;

export class PendantModel {
  lastState: StateDocument | null = null;
  jogStep: number = DEFAULT_JOG_STEP_MM;
  private failures = 0;
  private everConnected = false;

  get status(): ConnectionStatus {
    if (this.failures >= STALE_AFTER_FAILURES) {
      return this.everConnected ? "stale" : "disconnected";
    }
    return this.everConnected ? "connected" : "connecting";
  }

  /** Accept a poll result; out-of-order documents (older sim_time) are dropped. */
  applyPoll(doc: StateDocument): boolean {
    this.failures = 0;
    this.everConnected = true;
    if (this.lastState !== null && doc.sim_time < this.lastState.sim_time) {
      return false;
    }
    this.lastState = doc;
    return true;
  }

  applyPollFailure(): void {
    this.failures += 1;
  }

  /** Target for a one-step jog from the last known position. */
  jogTarget(axis: Axis, direction: 1 | -1): Vec3 | null {
    if (this.lastState === null) {
      return null;
    }
    const p = this.lastState.position;
    const step = this.jogStep * direction;
    switch (axis) {
      case "X":
        return { x: p.x + step, y: p.y, z: p.z };
      case "Y":
        return { x: p.x, y: p.y + step, z: p.z };
      case "Z":
        return { x: p.x, y: p.y, z: p.z + step };
    }
  }
}

export function formatMm(value: number): string {
  return value.toFixed(1);
}

export function formatDeg(value: number): string {
  return `${value.toFixed(1)}°`;
}

export function describeClamp(clamp: ClampDocument): string {
  const rules = clamp.applied.join(", ");
  const c = clamp.clamped;
  return `clamped [${rules}] → effective (${formatMm(c.x)}, ${formatMm(c.y)}, ${formatMm(c.z)})`;
}
