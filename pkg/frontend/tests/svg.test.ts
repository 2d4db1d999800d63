import { describe, expect, it } from "vitest";

import { highlightPanel, panelFromTarget, panelNumbers } from "../src/svg.js";

function fakeLineup(m: number): string {
  const panels = Array.from(
    { length: m },
    (_, i) =>
      `<g class="panel" id="panel-${i + 1}" transform="translate(${i * 10}.00,8.00)">` +
      `<rect x="0" y="0" width="9" height="9" fill="none" stroke="#bbbbbb"/></g>`,
  );
  return `<svg xmlns="http://www.w3.org/2000/svg">${panels.join("")}</svg>`;
}

describe("panelNumbers", () => {
  it("lists every panel group in order", () => {
    expect(panelNumbers(fakeLineup(5))).toEqual([1, 2, 3, 4, 5]);
  });

  it("counts highlighted panels too", () => {
    const marked = highlightPanel(fakeLineup(5), 3);
    expect(panelNumbers(marked)).toEqual([1, 2, 3, 4, 5]);
  });

  it("sees nothing in unrelated markup", () => {
    expect(panelNumbers("<svg><rect/></svg>")).toEqual([]);
  });
});

describe("highlightPanel", () => {
  it("adds the panel-hit class to exactly one group", () => {
    const marked = highlightPanel(fakeLineup(12), 12);
    expect(marked).toContain('<g class="panel panel-hit" id="panel-12"');
    expect(marked.match(/panel-hit/g)).toHaveLength(1);
  });

  it("does not touch panels sharing a digit prefix", () => {
    const marked = highlightPanel(fakeLineup(12), 1);
    expect(marked).toContain('<g class="panel panel-hit" id="panel-1"');
    expect(marked).toContain('<g class="panel" id="panel-11"');
    expect(marked).toContain('<g class="panel" id="panel-12"');
  });

  it("leaves the markup alone for an absent panel", () => {
    const svg = fakeLineup(4);
    expect(highlightPanel(svg, 9)).toBe(svg);
  });
});

describe("panelFromTarget", () => {
  const group = (id: string) =>
    ({ getAttribute: (name: string) => (name === "id" ? id : null) }) as unknown as Element;
  const inside = (found: Element | null) =>
    ({ closest: (sel: string) => (sel === "g.panel" ? found : null) }) as unknown as Element;

  it("walks up to the enclosing panel group", () => {
    expect(panelFromTarget(inside(group("panel-7")))).toBe(7);
  });

  it("returns null outside every panel", () => {
    expect(panelFromTarget(inside(null))).toBeNull();
    expect(panelFromTarget(null)).toBeNull();
  });

  it("returns null for a malformed id", () => {
    expect(panelFromTarget(inside(group("panel-x")))).toBeNull();
  });
});
