export type Phase = "setup" | "voting" | "revealed";

/** Reveal payload. data_panel and x are absent for Rorschach sessions,
 * p is absent when nobody voted. */
export interface RevealResult {
  K: number;
  x?: number;
  data_panel?: number;
  p?: number;
}

export interface SessionInfo {
  session_id: string;
  m: number;
  plot_kind: string;
  admin_token: string;
}

export interface SessionStatus {
  m: number;
  plot_kind: string;
  responses_so_far: number;
  revealed: boolean;
}

export interface ViewState {
  phase: Phase;
  session_id: string | null;
  m: number;
  plot_kind: string;
  my_pick: number | null;
  tally: number;
  result: RevealResult | null;
  banner: string | null;
}
