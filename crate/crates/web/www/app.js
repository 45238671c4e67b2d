import init, { construction, play, bounds } from "./pkg/arlab_web.js";

const $ = (id) => document.getElementById(id);
const NS = "http://www.w3.org/2000/svg";

function hue(color) {
  return `hsl(${(color * 137) % 360} 70% 45%)`;
}

// Vertices on a circle; parallel edges bend apart.
function draw(svg, n, edges, colors) {
  svg.replaceChildren();
  const size = svg.width.baseVal.value, r = size / 2 - 24, c = size / 2;
  const at = (v) => [c + r * Math.cos((2 * Math.PI * v) / n), c + r * Math.sin((2 * Math.PI * v) / n)];
  const seen = new Map();
  edges.forEach(([u, v], i) => {
    const key = `${Math.min(u, v)}-${Math.max(u, v)}`;
    const rank = seen.get(key) ?? 0;
    seen.set(key, rank + 1);
    const [x1, y1] = at(u), [x2, y2] = at(v);
    const bend = rank === 0 ? 0 : (rank % 2 ? 1 : -1) * Math.ceil(rank / 2) * 18;
    const len = Math.hypot(x2 - x1, y2 - y1) || 1;
    const mx = (x1 + x2) / 2 - ((y2 - y1) / len) * bend, my = (y1 + y2) / 2 + ((x2 - x1) / len) * bend;
    const path = document.createElementNS(NS, "path");
    path.setAttribute("d", `M${x1},${y1} Q${mx},${my} ${x2},${y2}`);
    path.setAttribute("fill", "none");
    path.setAttribute("stroke-width", "2.5");
    path.setAttribute("stroke", colors ? hue(colors[i]) : "#555");
    if (colors) {
      const t = document.createElementNS(NS, "title");
      t.textContent = `color ${colors[i]}`;
      path.append(t);
    }
    svg.append(path);
  });
  for (let v = 0; v < n; v++) {
    const [x, y] = at(v);
    const dot = document.createElementNS(NS, "circle");
    dot.setAttribute("cx", x);
    dot.setAttribute("cy", y);
    dot.setAttribute("r", n > 30 ? 3 : 5);
    svg.append(dot);
  }
}

function report(el, f) {
  el.classList.remove("err");
  try {
    return f();
  } catch (e) {
    el.classList.add("err");
    el.textContent = String(e.message ?? e);
  }
}

function runConstruction() {
  const out = $("c-out");
  report(out, () => {
    const r = JSON.parse(construction($("c-name").value, Number($("c-k").value)));
    out.textContent = `${r.construction}: ${r.edges} edges, ${r.status} ${r.target}. ${r.basis}`;
    const shown = r.witness ?? r.graph;
    draw($("c-svg"), shown.n, shown.edges, shown.colors);
  });
}

let game = null;

function showGame() {
  const { moves, summary } = game.doc;
  const shown = moves.slice(0, game.step);
  const n = shown.reduce((m, mv) => Math.max(m, mv.vertices[0] + 1, mv.vertices[1] + 1), 0);
  draw($("g-svg"), n, shown.map((m) => m.vertices), shown.map((m) => m.color));
  const last = shown[shown.length - 1];
  let text = `move ${game.step} of ${moves.length}`;
  if (last) text += `: edge ${last.vertices[0]}-${last.vertices[1]} gets color ${last.color}`;
  if (game.step === moves.length) {
    text += `. ${summary.result ? "Builder wins" : "No rainbow " + summary.target}` +
      ` after ${summary.edges_used} edges (guarantee ${game.doc.bound}).`;
  }
  $("g-out").textContent = text;
  $("g-step").disabled = game.step === moves.length;
}

function runGame() {
  const out = $("g-out");
  report(out, () => {
    const doc = JSON.parse(play($("g-pattern").value.trim(), $("g-builder").value, $("g-painter").value, Number($("g-seed").value)));
    game = { doc, step: 0 };
    showGame();
  });
}

function runBounds() {
  const out = $("b-out");
  report(out, () => {
    out.textContent = JSON.parse(bounds($("b-pattern").value.trim())).text;
  });
}

await init();
$("c-go").onclick = runConstruction;
$("g-go").onclick = runGame;
$("g-step").onclick = () => {
  game.step++;
  showGame();
};
$("b-go").onclick = runBounds;
runConstruction();
