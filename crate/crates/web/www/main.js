import init, { periodic_map_curve, swarm_trace, case_summary } from "./pkg/periswarm_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);
let trace = null;

function report(fn) {
  try {
    $("error").textContent = "";
    fn();
  } catch (err) {
    $("error").textContent = String(err.message ?? err);
  }
}

function scaler(canvas, lo, hi) {
  const sx = canvas.width / (hi[0] - lo[0]);
  const sy = canvas.height / (hi[1] - lo[1]);
  return ([x, y]) => [(x - lo[0]) * sx, canvas.height - (y - lo[1]) * sy];
}

function dot(ctx, [x, y], r, color) {
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.arc(x, y, r, 0, 2 * Math.PI);
  ctx.fill();
}

function drawFrame() {
  if (!trace) return;
  const f = trace.frames[num("t-frame")];
  const { lower, upper, grid, feasible } = trace;

  const box = $("t-box");
  const ctx = box.getContext("2d");
  ctx.clearRect(0, 0, box.width, box.height);
  const cw = box.width / grid, ch = box.height / grid;
  ctx.fillStyle = "#cfe8cf";
  for (let r = 0; r < grid; r++)
    for (let c = 0; c < grid; c++)
      if (feasible[r * grid + c]) ctx.fillRect(c * cw, box.height - (r + 1) * ch, cw + 0.5, ch + 0.5);
  const inBox = scaler(box, lower, upper);
  f.evaluated.forEach((p) => dot(ctx, inBox(p), 3, "#1f5fbf"));
  dot(ctx, inBox(f.gbest), 6, "#d03030");

  const flight = $("t-flight");
  const fc = flight.getContext("2d");
  fc.clearRect(0, 0, flight.width, flight.height);
  const span = [upper[0] - lower[0], upper[1] - lower[1]];
  const lo = [lower[0] - 2 * span[0], lower[1] - 2 * span[1]];
  const hi = [upper[0] + 2 * span[0], upper[1] + 2 * span[1]];
  const tiled = scaler(flight, lo, hi);
  fc.strokeStyle = "#ddd";
  for (let k = -2; k <= 3; k++) {
    const [x] = tiled([lower[0] + k * span[0], 0]);
    const [, y] = tiled([0, lower[1] + k * span[1]]);
    fc.beginPath(); fc.moveTo(x, 0); fc.lineTo(x, flight.height); fc.stroke();
    fc.beginPath(); fc.moveTo(0, y); fc.lineTo(flight.width, y); fc.stroke();
  }
  const [x0, y1] = tiled(lower), [x1, y0] = tiled(upper);
  fc.strokeStyle = "#444";
  fc.strokeRect(x0, y0, x1 - x0, y1 - y0);
  f.flight.forEach((p) => dot(fc, tiled(p), 2.5, "#1f5fbf"));

  $("t-status").textContent =
    `t=${f.generation}  best=${f.gbest_value.toPrecision(6)}  ${f.gbest_feasible ? "feasible" : "infeasible"}`;
}

function runTrace() {
  report(() => {
    const json = swarm_trace($("t-problem").value, $("t-engine").value, $("t-mode").value,
      num("t-particles"), num("t-generations"), num("t-seed"));
    trace = JSON.parse(json);
    $("t-frame").max = trace.frames.length - 1;
    $("t-frame").value = trace.frames.length - 1;
    drawFrame();
  });
}

function plotMap() {
  report(() => {
    const lower = num("m-lower"), upper = num("m-upper"), from = num("m-from"), to = num("m-to");
    const xy = periodic_map_curve(lower, upper, from, to, 2001);
    const canvas = $("m-plot");
    const ctx = canvas.getContext("2d");
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    const pad = (upper - lower) * 0.1;
    const at = scaler(canvas, [from, lower - pad], [to, upper + pad]);
    ctx.strokeStyle = "#ccc";
    for (const y of [lower, upper]) {
      const [, py] = at([from, y]);
      ctx.beginPath(); ctx.moveTo(0, py); ctx.lineTo(canvas.width, py); ctx.stroke();
    }
    ctx.fillStyle = "#1f5fbf";
    for (let i = 0; i < xy.length; i += 2) {
      const [px, py] = at([xy[i], xy[i + 1]]);
      ctx.fillRect(px, py - 1, 1.5, 2);
    }
  });
}

function runSummary() {
  report(() => {
    const json = case_summary($("c-problem").value, $("c-engine").value, $("c-mode").value,
      num("c-particles"), num("c-generations"), num("c-runs"), num("c-seed"));
    $("c-out").textContent = JSON.stringify(JSON.parse(json), null, 2);
  });
}

await init();
$("t-run").addEventListener("click", runTrace);
$("t-frame").addEventListener("input", drawFrame);
$("m-run").addEventListener("click", plotMap);
$("c-run").addEventListener("click", runSummary);
runTrace();
plotMap();
