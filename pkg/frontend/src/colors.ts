// Fixed palette keyed by point id, stable across sessions so poets learn
// the mapping. The first seven are hand-picked for contrast; larger forms
// (e.g. the 13-point plane) extend by deterministic hue rotation.

const BASE_PALETTE = [
  "#d62728", // 0 red
  "#1f77b4", // 1 blue
  "#2ca02c", // 2 green
  "#9467bd", // 3 purple
  "#ff7f0e", // 4 orange
  "#17becf", // 5 cyan
  "#8c564b", // 6 brown
];

export function colorForPoint(pointId: number): string {
  if (pointId < BASE_PALETTE.length) return BASE_PALETTE[pointId];
  const hue = (pointId * 137) % 360;
  return `hsl(${hue}, 65%, 42%)`;
}
