import init, { solve, verify, generate } from "./pkg/gridmark_web.js";

const $ = (id) => document.getElementById(id);

function show(raw, summary) {
  const out = JSON.parse(raw);
  const result = $("result");
  if (!out.ok) {
    result.className = "error";
    result.textContent = out.error;
    return null;
  }
  result.className = "";
  result.textContent = summary(out);
  if (out.svg) $("figure").innerHTML = out.svg;
  return out;
}

function fmt(vs) {
  return vs.map(([r, c]) => `(${r},${c})`).join(" ");
}

await init();

$("solve").onclick = () =>
  show(solve($("instance").value), (out) => {
    const s = out.solution;
    const lines = [`cost ${s.cost}, ${s.cardinality} vertices, ${s.category}`, fmt(s.vertices), ""];
    for (const [name, best] of Object.entries(s.report)) {
      lines.push(`${name}: ${best ? `${best.cost}  ${fmt(best.vertices)}` : "none"}`);
    }
    return lines.join("\n");
  });

$("verify").onclick = () =>
  show(verify($("instance").value, $("set").value), (out) =>
    out.landmark
      ? `landmark set; ${out.minimal ? "minimal" : "not minimal"}; cost ${out.cost}`
      : `not a landmark set; pair ${fmt(out.pair)}; cost ${out.cost}`,
  );

$("generate").onclick = () => {
  const out = show(generate(+$("m").value, +$("n").value, +$("max").value, +$("seed").value), () => "generated");
  if (out) $("instance").value = out.csv;
};
