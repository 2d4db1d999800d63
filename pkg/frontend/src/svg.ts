/** Helpers over the rendered lineup markup. The SVG is inlined into the
 * page so the panel groups (<g class="panel" id="panel-N">) become
 * ordinary DOM nodes; these functions work on the markup as text so they
 * run the same way in tests without a browser. */

const PANEL_ID = /<g class="panel(?: panel-hit)?" id="panel-(\d+)"/g;

export function panelNumbers(svg: string): number[] {
  const numbers: number[] = [];
  for (const match of svg.matchAll(PANEL_ID)) {
    numbers.push(Number(match[1]));
  }
  return numbers;
}

/** Tag one panel group with the panel-hit class; the stylesheet draws
 * the outline. Applied only after reveal. */
export function highlightPanel(svg: string, panel: number): string {
  return svg.replace(
    `<g class="panel" id="panel-${panel}"`,
    `<g class="panel panel-hit" id="panel-${panel}"`,
  );
}

/** Panel number for a click target inside the inlined SVG, or null when
 * the click landed outside every panel group. */
export function panelFromTarget(target: Element | null): number | null {
  const group = target?.closest("g.panel");
  if (!group) return null;
  const id = group.getAttribute("id") ?? "";
  const match = /^panel-(\d+)$/.exec(id);
  return match ? Number(match[1]) : null;
}
