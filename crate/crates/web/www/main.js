import init, { defaults, degreeCurves, richClub, spectrum } from "./pkg/astopo_web.js";

const $ = (id) => document.getElementById(id);
const status = $("status");
const canvas = $("plot");
const ctx = canvas.getContext("2d");

function say(text, isError = false) {
  status.textContent = text;
  status.className = isError ? "error" : "";
}

function renderParams() {
  const box = $("params");
  box.replaceChildren();
  let fields;
  try {
    fields = JSON.parse(defaults($("model").value, Number($("n").value)));
  } catch (e) {
    say(String(e), true);
    return;
  }
  for (const [key, value] of Object.entries(fields)) {
    const label = document.createElement("label");
    const input = document.createElement("input");
    input.type = "number";
    input.step = "any";
    input.value = value;
    input.dataset.key = key;
    label.append(key + " ", input);
    box.append(label);
  }
}

function request() {
  const params = {};
  for (const input of $("params").querySelectorAll("input")) {
    params[input.dataset.key] = Number(input.value);
  }
  return JSON.stringify({
    model: $("model").value,
    n: Number($("n").value),
    seed: Number($("seed").value),
    params,
  });
}

// series: [{ points: [[x, y]], color, label }]
function plot(series, { logX = false, logY = false, xLabel = "", yLabel = "" } = {}) {
  const W = canvas.width, H = canvas.height, pad = 50;
  ctx.clearRect(0, 0, W, H);
  const tx = (v) => (logX ? Math.log10(v) : v);
  const ty = (v) => (logY ? Math.log10(v) : v);
  const pts = series.flatMap((s) => s.points).filter(([x, y]) => (!logX || x > 0) && (!logY || y > 0));
  if (pts.length === 0) {
    say("nothing to plot", true);
    return;
  }
  let [x0, x1] = [Math.min(...pts.map((p) => tx(p[0]))), Math.max(...pts.map((p) => tx(p[0])))];
  let [y0, y1] = [Math.min(...pts.map((p) => ty(p[1]))), Math.max(...pts.map((p) => ty(p[1])))];
  if (x0 === x1) { x0 -= 1; x1 += 1; }
  if (y0 === y1) { y0 -= 1; y1 += 1; }
  const px = (v) => pad + ((tx(v) - x0) / (x1 - x0)) * (W - 2 * pad);
  const py = (v) => H - pad - ((ty(v) - y0) / (y1 - y0)) * (H - 2 * pad);

  ctx.strokeStyle = "#888";
  ctx.strokeRect(pad, pad, W - 2 * pad, H - 2 * pad);
  ctx.fillStyle = "#333";
  ctx.font = "12px system-ui";
  const tick = (v, log) => (log ? "1e" + v.toFixed(1) : v.toPrecision(3));
  ctx.fillText(tick(x0, logX), pad, H - pad + 16);
  ctx.fillText(tick(x1, logX), W - pad - 30, H - pad + 16);
  ctx.fillText(tick(y0, logY), 4, H - pad);
  ctx.fillText(tick(y1, logY), 4, pad + 10);
  ctx.fillText(xLabel, W / 2 - 20, H - 12);
  ctx.fillText(yLabel, 4, pad - 14);

  series.forEach((s, i) => {
    ctx.fillStyle = s.color;
    for (const [x, y] of s.points) {
      if ((logX && x <= 0) || (logY && y <= 0)) continue;
      ctx.fillRect(px(x) - 2, py(y) - 2, 4, 4);
    }
    ctx.fillText(s.label, W - pad - 120, pad + 16 + 16 * i);
  });
}

function histogram(values, bins) {
  const counts = new Array(bins).fill(0);
  for (const v of values) {
    counts[Math.min(bins - 1, Math.max(0, Math.floor((v / 2) * bins)))] += 1;
  }
  return counts.map((c, i) => [((i + 0.5) * 2) / bins, c / values.length]);
}

function run(op) {
  say("working...");
  // Let the status repaint before the synchronous call.
  setTimeout(() => {
    const t0 = performance.now();
    try {
      op(request());
    } catch (e) {
      say(String(e), true);
      return;
    }
    const ms = Math.round(performance.now() - t0);
    status.textContent += ` (${ms} ms)`;
  }, 0);
}

$("degree").onclick = () =>
  run((req) => {
    const r = JSON.parse(degreeCurves(req));
    plot(
      [
        { points: r.p_k, color: "#1f77b4", label: "P(k)" },
        { points: r.knn_norm, color: "#d62728", label: "knn(k)/(N-1)" },
      ],
      { logX: true, logY: true, xLabel: "degree k" },
    );
    say(`N=${r.n} M=${r.m} avg degree ${r.avg_degree.toFixed(3)}`);
  });

$("richclub").onclick = () =>
  run((req) => {
    const r = JSON.parse(richClub(req));
    plot([{ points: r.points, color: "#2ca02c", label: "phi(rho/N)" }], {
      logX: true,
      logY: true,
      xLabel: "rho / N",
    });
    say(`N=${r.n} M=${r.m}`);
  });

$("spectrum").onclick = () =>
  run((req) => {
    const r = JSON.parse(spectrum(req));
    plot([{ points: histogram(r.eigenvalues, 80), color: "#9467bd", label: "eigenvalue density" }], {
      xLabel: "lambda",
    });
    say(`N=${r.n} M=${r.m}`);
  });

$("model").onchange = renderParams;

await init();
renderParams();
say("ready");
