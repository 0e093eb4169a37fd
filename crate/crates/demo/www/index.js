import init, { construction, solve, curves } from "./pkg/hfl_demo.js";

const $ = (id) => document.getElementById(id);
let current = null;

function showError(el, e) {
  el.textContent = String(e.message ?? e);
  el.classList.add("error");
}

function drawHeatmap(data) {
  const canvas = $("heatmap");
  const ctx = canvas.getContext("2d");
  const cell = canvas.width / data.n;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let i = 0; i < data.n; i++) {
    for (let j = 0; j < data.n; j++) {
      const w = data.cells[i * data.n + j];
      const shade = Math.round(255 * (1 - w));
      ctx.fillStyle = `rgb(${shade}, ${shade}, 255)`;
      ctx.fillRect(j * cell, i * cell, cell, cell);
    }
  }
}

function build() {
  const info = $("build-info");
  info.classList.remove("error");
  try {
    const data = JSON.parse(construction($("kind").value, Number($("r").value), $("t").value,
      Number($("n").value), BigInt($("seed").value)));
    current = data;
    info.textContent = `n = ${data.n}, minimum weighted degree = ${data.min_weighted_degree}`;
    drawHeatmap(data);
  } catch (e) {
    current = null;
    showError(info, e);
  }
}

function runSolve() {
  const out = $("solve-out");
  out.classList.remove("error");
  if (!current) {
    showError(out, "build a graph first");
    return;
  }
  try {
    const cert = JSON.parse(solve(JSON.stringify(current.graph), Number($("r").value), $("t").value,
      $("strict").checked));
    out.textContent = JSON.stringify(cert, null, 2);
  } catch (e) {
    showError(out, e);
  }
}

function plot() {
  const canvas = $("curves");
  const ctx = canvas.getContext("2d");
  const rs = new Uint32Array($("curve-rs").value.split(",").map((s) => Number(s.trim())));
  let data;
  try {
    data = JSON.parse(curves(rs, 50));
  } catch (e) {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    ctx.fillStyle = "#b00";
    ctx.fillText(String(e.message ?? e), 10, 20);
    return;
  }
  const pad = 30;
  const x = (t) => pad + t * (canvas.width - 2 * pad);
  const y = (d) => canvas.height - pad - d * (canvas.height - 2 * pad);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#888";
  ctx.strokeRect(x(0), y(1), x(1) - x(0), y(0) - y(1));
  const line = (points, color, label) => {
    ctx.strokeStyle = color;
    ctx.beginPath();
    points.forEach(([t, d], k) => (k ? ctx.lineTo(x(t), y(d)) : ctx.moveTo(x(t), y(d))));
    ctx.stroke();
    const [t, d] = points[Math.floor(points.length / 3)];
    ctx.fillStyle = color;
    ctx.fillText(label, x(t) + 4, y(d) - 4);
  };
  const palette = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e"];
  data.lower.forEach((c, k) => line(c.conjecture, palette[k % palette.length], `conjecture r=${c.r}`));
  line(data.upper, "#000", "upper 1/2 + t/2");
  ctx.fillStyle = "#000";
  ctx.fillText("t", x(1) - 4, y(0) + 18);
  ctx.fillText("0", x(0) - 4, y(0) + 12);
  ctx.fillText("1", x(1) - 4, y(0) + 12);
}

await init();
$("build").addEventListener("click", build);
$("solve").addEventListener("click", runSolve);
$("plot").addEventListener("click", plot);
build();
plot();
