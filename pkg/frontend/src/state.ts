import type { RevealResult, SessionInfo, ViewState } from "./types.js";

/** Pure view-state transitions. The DOM layer calls these and re-renders;
 * keeping them free of fetch/DOM makes the invariants unit-testable:
 * my_pick never changes once set, and result exists only in the revealed
 * phase. */

export function initialState(): ViewState {
  return {
    phase: "setup",
    session_id: null,
    m: 0,
    plot_kind: "",
    my_pick: null,
    tally: 0,
    result: null,
    banner: null,
  };
}

export function sessionCreated(state: ViewState, info: SessionInfo): ViewState {
  return {
    ...state,
    phase: "voting",
    session_id: info.session_id,
    m: info.m,
    plot_kind: info.plot_kind,
    my_pick: null,
    tally: 0,
    result: null,
    banner: null,
  };
}

/** Reason a click on `panel` must be ignored, or null if it may proceed. */
export function pickBlocked(state: ViewState, panel: number): string | null {
  if (state.phase === "revealed") {
    return "Voting closed.";
  }
  if (state.phase !== "voting") {
    return "No session yet.";
  }
  if (state.my_pick !== null) {
    return `You already picked panel ${state.my_pick}.`;
  }
  if (!Number.isInteger(panel) || panel < 1 || panel > state.m) {
    return `Panel ${panel} is out of range.`;
  }
  return null;
}

export function pickAccepted(state: ViewState, panel: number, tally: number): ViewState {
  if (state.my_pick !== null) {
    return state;
  }
  return { ...state, my_pick: panel, tally, banner: null };
}

/** Server-side rejection (duplicate tag, revealed meanwhile) shows a
 * banner without touching the pick. */
export function pickRejected(state: ViewState, code: string): ViewState {
  const text =
    code === "already_revealed"
      ? "Voting closed."
      : code === "duplicate_observer"
        ? "This browser already voted."
        : `Vote not accepted (${code}).`;
  return { ...state, banner: text };
}

export function tallyUpdated(state: ViewState, tally: number): ViewState {
  return { ...state, tally };
}

export function revealed(state: ViewState, result: RevealResult): ViewState {
  return { ...state, phase: "revealed", result, banner: null };
}
