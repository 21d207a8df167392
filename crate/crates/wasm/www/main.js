import init, {
  partial_sums,
  hap_profile,
  sigma_zero_summary,
  dyadic_curve,
  odd_threshold,
} from "./pkg/multdisc_wasm.js";

const $ = (id) => document.getElementById(id);

function frame(canvas, xmin, xmax, ymin, ymax) {
  const ctx = canvas.getContext("2d");
  const pad = 40;
  const w = canvas.width - 2 * pad;
  const h = canvas.height - 2 * pad;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const sx = (x) => pad + ((x - xmin) / (xmax - xmin || 1)) * w;
  const sy = (y) => pad + h - ((y - ymin) / (ymax - ymin || 1)) * h;
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w, h);
  ctx.fillStyle = "#555";
  ctx.font = "11px sans-serif";
  ctx.fillText(ymax.toPrecision(4), 2, pad + 4);
  ctx.fillText(ymin.toPrecision(4), 2, pad + h);
  ctx.fillText(xmin.toPrecision(4), pad, pad + h + 14);
  ctx.fillText(xmax.toPrecision(4), pad + w - 40, pad + h + 14);
  if (ymin < 0 && ymax > 0) {
    ctx.beginPath();
    ctx.moveTo(pad, sy(0));
    ctx.lineTo(pad + w, sy(0));
    ctx.strokeStyle = "#ddd";
    ctx.stroke();
  }
  return { ctx, sx, sy };
}

function line(plot, xs, ys, color) {
  const { ctx, sx, sy } = plot;
  ctx.beginPath();
  xs.forEach((x, i) => (i ? ctx.lineTo(sx(x), sy(ys[i])) : ctx.moveTo(sx(x), sy(ys[i]))));
  ctx.strokeStyle = color;
  ctx.stroke();
}

function columns(flat, width) {
  const cols = Array.from({ length: width }, () => []);
  flat.forEach((v, i) => cols[i % width].push(v));
  return cols;
}

function guarded(errId, fn) {
  return () => {
    $(errId).textContent = "";
    try {
      fn();
    } catch (e) {
      $(errId).textContent = e.message ?? String(e);
    }
  };
}

function plotPartialSums() {
  const limit = Number($("ps-limit").value);
  const ratio = Number($("ps-ratio").value);
  const [x, s, t] = columns(partial_sums($("fn").value, limit, ratio), 3);
  const lx = x.map(Math.log10);
  const all = s.concat(t);
  const plot = frame($("ps-canvas"), lx[0], lx[lx.length - 1], Math.min(...all), Math.max(...all));
  line(plot, lx, s, "#000");
  line(plot, lx, t, "#36c");
}

function plotHap() {
  const limit = Number($("hap-limit").value);
  const maxD = Number($("hap-d").value);
  const [d, , v] = columns(hap_profile($("fn").value, limit, maxD), 3);
  const plot = frame($("hap-canvas"), 0.5, d.length + 0.5, 0, Math.max(...v, 1));
  const { ctx, sx, sy } = plot;
  const bw = (sx(1) - sx(0)) * 0.8;
  ctx.fillStyle = "#36c";
  d.forEach((di, i) => ctx.fillRect(sx(di) - bw / 2, sy(v[i]), bw, sy(0) - sy(v[i])));
}

function plotDyadic(alpha) {
  const k0 = Number($("dy-k0").value);
  $("dy-k0-val").textContent = k0;
  const lo = 0.5;
  const [s, h, odd] = columns(dyadic_curve(k0, lo, 200), 3);
  const all = h.concat(odd);
  const plot = frame($("dy-canvas"), lo, 1, Math.min(...all), Math.max(...all));
  line(plot, s, h, "#000");
  line(plot, s, odd, "#999");
  const { ctx, sx, sy } = plot;
  const marks = [[odd_threshold(), "#999"]];
  if (Number.isFinite(alpha)) marks.push([alpha, "#c33"]);
  for (const [x, color] of marks) {
    ctx.beginPath();
    ctx.moveTo(sx(x), sy(Math.min(...all)));
    ctx.lineTo(sx(x), sy(Math.max(...all)));
    ctx.strokeStyle = color;
    ctx.stroke();
  }
}

let alpha = NaN;

function sigmaZero() {
  const [k0, a, s0] = sigma_zero_summary($("fn").value);
  alpha = a;
  $("sz-out").textContent = Number.isFinite(k0)
    ? `k0 = ${k0}, alpha = ${a.toFixed(12)}, sigma0 = ${s0.toFixed(12)}`
    : `f(2^k) = +1 for all k; sigma0 = ${s0.toFixed(12)}`;
  if (Number.isFinite(k0)) $("dy-k0").value = Math.min(k0, 12);
  plotDyadic(alpha);
}

await init();
$("ps-run").onclick = guarded("ps-err", plotPartialSums);
$("hap-run").onclick = guarded("hap-err", plotHap);
$("sz-run").onclick = guarded("sz-err", sigmaZero);
$("dy-k0").oninput = () => {
  alpha = NaN;
  plotDyadic(alpha);
};
plotDyadic(alpha);
