// SVG diagram of the Fano plane: triangle, medians, and incircle. Points
// are positioned by id; highlightPoints lights up a stanza's line.

import { colorForPoint } from "./colors.js";

const SIZE = 240;
const CX = SIZE / 2;

// equilateral layout so the incircle passes through the side midpoints
const BASE_Y = 204;
const HALF_SIDE = CX - 16;
const TOP: [number, number] = [CX, BASE_Y - HALF_SIDE * Math.sqrt(3)];
const LEFT: [number, number] = [CX - HALF_SIDE, BASE_Y];
const RIGHT: [number, number] = [CX + HALF_SIDE, BASE_Y];

function midpoint(a: [number, number], b: [number, number]): [number, number] {
  return [(a[0] + b[0]) / 2, (a[1] + b[1]) / 2];
}

const CENTER: [number, number] = [CX, (TOP[1] + LEFT[1] + RIGHT[1]) / 3];

// point id -> position, chosen so the seven drawn strokes carry exactly the
// published line set: sides 045, 156, 346; medians 124, 235, 026; circle 013
export const POINT_POSITIONS: Record<number, [number, number]> = {
  4: TOP,
  5: LEFT,
  6: RIGHT,
  0: midpoint(TOP, LEFT),
  1: midpoint(LEFT, RIGHT),
  3: midpoint(TOP, RIGHT),
  2: CENTER,
};

export function renderFanoDiagram(container: HTMLElement): void {
  const svgNS = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNS, "svg");
  svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
  svg.setAttribute("class", "fano-diagram");

  const strokes: [number, number][][] = [
    [TOP, LEFT],
    [LEFT, RIGHT],
    [TOP, RIGHT],
    [TOP, midpoint(LEFT, RIGHT)],
    [LEFT, midpoint(TOP, RIGHT)],
    [RIGHT, midpoint(TOP, LEFT)],
  ];
  for (const [a, b] of strokes) {
    const line = document.createElementNS(svgNS, "line");
    line.setAttribute("x1", String(a[0]));
    line.setAttribute("y1", String(a[1]));
    line.setAttribute("x2", String(b[0]));
    line.setAttribute("y2", String(b[1]));
    line.setAttribute("class", "fano-edge");
    svg.appendChild(line);
  }
  const circle = document.createElementNS(svgNS, "circle");
  const mid = midpoint(LEFT, RIGHT);
  const radius = Math.hypot(CENTER[0] - mid[0], CENTER[1] - mid[1]);
  circle.setAttribute("cx", String(CENTER[0]));
  circle.setAttribute("cy", String(CENTER[1]));
  circle.setAttribute("r", String(radius));
  circle.setAttribute("class", "fano-edge");
  circle.setAttribute("fill", "none");
  svg.appendChild(circle);

  for (const [idStr, [x, y]] of Object.entries(POINT_POSITIONS)) {
    const id = Number(idStr);
    const dot = document.createElementNS(svgNS, "circle");
    dot.setAttribute("cx", String(x));
    dot.setAttribute("cy", String(y));
    dot.setAttribute("r", "9");
    dot.setAttribute("fill", colorForPoint(id));
    dot.setAttribute("data-point", String(id));
    dot.setAttribute("class", "fano-point");
    svg.appendChild(dot);
    const label = document.createElementNS(svgNS, "text");
    label.setAttribute("x", String(x));
    label.setAttribute("y", String(y + 4));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "fano-label");
    label.textContent = String(id);
    svg.appendChild(label);
  }
  container.replaceChildren(svg);
}

export function highlightPoints(container: HTMLElement, pointIds: number[]): void {
  const wanted = new Set(pointIds);
  container.querySelectorAll<SVGCircleElement>(".fano-point").forEach((dot) => {
    const id = Number(dot.dataset.point);
    dot.setAttribute("r", wanted.has(id) ? "13" : "9");
    dot.setAttribute("stroke", wanted.has(id) ? "#222" : "none");
    dot.setAttribute("stroke-width", wanted.has(id) ? "3" : "0");
  });
}
