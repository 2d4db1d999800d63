/** p to three significant figures (0.00115813 -> "0.00116"). */
export function formatP(p: number): string {
  return Number(p.toPrecision(3)).toString();
}

export function interpretation(p: number): string {
  return p <= 0.05
    ? "Small p: evidence against the null claim."
    : "Large p: consistent with the null claim.";
}

export function revealSummary(result: {
  K: number;
  x?: number;
  data_panel?: number;
  p?: number;
}): string {
  if (result.data_panel === undefined) {
    return "All panels were null.";
  }
  const parts = [`The data is in panel ${result.data_panel}.`];
  if (result.x !== undefined) {
    parts.push(`${result.x} of ${result.K} observers found it.`);
  }
  if (result.p !== undefined) {
    parts.push(`p = ${formatP(result.p)}. ${interpretation(result.p)}`);
  }
  return parts.join(" ");
}
