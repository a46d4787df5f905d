// Schematic geometry for the two projection views plus canvas painters.
// Geometry functions are pure and unit-tested; painters only draw.
//
// Side view: the vertical plane the arm currently works in, horizontal
// axis u = radial distance from the waist axis, vertical axis z.
// Top view: the X-Y plane seen from above.

import type { ConfigDocument, StateDocument } from "./model.js";

export interface Point {
  u: number;
  v: number;
}

export interface Rect {
  u0: number;
  v0: number;
  u1: number;
  v1: number;
}

const DEG = Math.PI / 180;

/**
 * Side-view polyline of the linkage: base, column top, boom tip, elbow,
 * tool tip. Joint angles and link lengths come from the server state and
 * config; this is presentation geometry for the drawing, not a kinematics
 * computation the UI relies on (readouts use server values only).
 */
export function sideViewChain(state: StateDocument, config: ConfigDocument): Point[] {
  const { a0, a1, a2, a3 } = config.links;
  const t2 = state.joints_deg[1] * DEG;
  const t3 = state.joints_deg[2] * DEG;
  const p1: Point = { u: 0, v: a0 };
  const p2: Point = { u: a1, v: a0 };
  const elbow: Point = { u: p2.u + a2 * Math.cos(t2), v: p2.v - a2 * Math.sin(t2) };
  const tip: Point = {
    u: elbow.u + a3 * Math.cos(t2 + t3),
    v: elbow.v - a3 * Math.sin(t2 + t3),
  };
  return [{ u: 0, v: 0 }, p1, p2, elbow, tip];
}

/** Server-reported tool position projected into the side view (u = w). */
export function sideViewTip(state: StateDocument): Point {
  const { x, y, z } = state.position;
  return { u: Math.hypot(x, y), v: z };
}

/** Top-view arm ray: origin to the tool's X-Y projection, plus w and t1. */
export function topViewRay(state: StateDocument): { tip: Point; w: number; t1Deg: number } {
  const { x, y } = state.position;
  return {
    tip: { u: x, v: y },
    w: Math.hypot(x, y),
    t1Deg: state.joints_deg[0],
  };
}

/** Side-view forbidden region: everything below the Z floor. */
export function sideForbidden(config: ConfigDocument, extent: number): Rect {
  return { u0: -extent, v0: -extent, u1: extent, v1: config.limits.z_floor };
}

/** Top-view forbidden regions from the two one-sided X rules. */
export function topForbidden(config: ConfigDocument, extent: number): Rect[] {
  const { x_min_when_y_negative, x_threshold_when_y_positive } = config.limits;
  return [
    { u0: -extent, v0: -extent, u1: x_min_when_y_negative, v1: 0 },
    { u0: x_threshold_when_y_positive, v0: 0, u1: extent, v1: extent },
  ];
}

/** Drawing extent (mm) that comfortably contains the whole workspace. */
export function viewExtent(config: ConfigDocument): number {
  const { a0, a1, a2, a3 } = config.links;
  return (a0 + a1 + a2 + a3) * 1.15;
}

// ---------------------------------------------------------------------------
// Canvas painters

interface Mapper {
  x(u: number): number;
  y(v: number): number;
}

function mapper(canvas: HTMLCanvasElement, extent: number): Mapper {
  const scale = Math.min(canvas.width, canvas.height) / (2 * extent);
  return {
    x: (u) => canvas.width / 2 + u * scale,
    y: (v) => canvas.height / 2 - v * scale,
  };
}

function drawRect(ctx: CanvasRenderingContext2D, m: Mapper, r: Rect, fill: string): void {
  ctx.fillStyle = fill;
  const x0 = m.x(Math.min(r.u0, r.u1));
  const y0 = m.y(Math.max(r.v0, r.v1));
  ctx.fillRect(x0, y0, Math.abs(m.x(r.u1) - m.x(r.u0)), Math.abs(m.y(r.v1) - m.y(r.v0)));
}

function drawPolyline(ctx: CanvasRenderingContext2D, m: Mapper, pts: Point[], stroke: string, width = 3): void {
  ctx.strokeStyle = stroke;
  ctx.lineWidth = width;
  ctx.lineJoin = "round";
  ctx.lineCap = "round";
  ctx.beginPath();
  pts.forEach((p, i) => (i === 0 ? ctx.moveTo(m.x(p.u), m.y(p.v)) : ctx.lineTo(m.x(p.u), m.y(p.v))));
  ctx.stroke();
}

function drawDot(ctx: CanvasRenderingContext2D, m: Mapper, p: Point, color: string, radius = 4): void {
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.arc(m.x(p.u), m.y(p.v), radius, 0, 2 * Math.PI);
  ctx.fill();
}

function drawAxes(ctx: CanvasRenderingContext2D, canvas: HTMLCanvasElement, m: Mapper, labels: [string, string]): void {
  ctx.strokeStyle = "#ccc";
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(0, m.y(0));
  ctx.lineTo(canvas.width, m.y(0));
  ctx.moveTo(m.x(0), 0);
  ctx.lineTo(m.x(0), canvas.height);
  ctx.stroke();
  ctx.fillStyle = "#888";
  ctx.font = "11px sans-serif";
  ctx.fillText(labels[0], canvas.width - 14, m.y(0) - 4);
  ctx.fillText(labels[1], m.x(0) + 4, 12);
}

export function paintSideView(canvas: HTMLCanvasElement, state: StateDocument, config: ConfigDocument): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const extent = viewExtent(config);
  const m = mapper(canvas, extent);
  drawRect(ctx, m, sideForbidden(config, extent), "rgba(220, 60, 60, 0.25)");
  // floor line
  ctx.strokeStyle = "#c33";
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  ctx.moveTo(0, m.y(config.limits.z_floor));
  ctx.lineTo(canvas.width, m.y(config.limits.z_floor));
  ctx.stroke();
  drawAxes(ctx, canvas, m, ["w", "z"]);
  const chain = sideViewChain(state, config);
  drawPolyline(ctx, m, chain, "#2a6fb0");
  chain.slice(1, 4).forEach((p) => drawDot(ctx, m, p, "#2a6fb0", 3));
  drawDot(ctx, m, sideViewTip(state), "#e67e22", 5);
}

export function paintTopView(canvas: HTMLCanvasElement, state: StateDocument, config: ConfigDocument): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const extent = viewExtent(config);
  const m = mapper(canvas, extent);
  for (const r of topForbidden(config, extent)) {
    drawRect(ctx, m, r, "rgba(220, 60, 60, 0.25)");
  }
  drawAxes(ctx, canvas, m, ["x", "y"]);
  const { tip, w, t1Deg } = topViewRay(state);
  drawPolyline(ctx, m, [{ u: 0, v: 0 }, tip], "#2a6fb0");
  drawDot(ctx, m, tip, "#e67e22", 5);
  ctx.fillStyle = "#555";
  ctx.font = "11px sans-serif";
  ctx.fillText(`w=${w.toFixed(1)}  t1=${t1Deg.toFixed(1)}°`, 8, canvas.height - 8);
}
