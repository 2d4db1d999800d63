import { describe, expect, it } from "vitest";

import {
  initialState,
  pickAccepted,
  pickBlocked,
  pickRejected,
  revealed,
  sessionCreated,
  tallyUpdated,
} from "../src/state.js";
import type { SessionInfo } from "../src/types.js";

const INFO: SessionInfo = {
  session_id: "abc123",
  m: 20,
  plot_kind: "boxplot",
  admin_token: "tok",
};

describe("initialState", () => {
  it("starts in setup with nothing picked", () => {
    const s = initialState();
    expect(s.phase).toBe("setup");
    expect(s.session_id).toBeNull();
    expect(s.my_pick).toBeNull();
    expect(s.result).toBeNull();
  });
});

describe("sessionCreated", () => {
  it("enters voting and adopts the session identity", () => {
    const s = sessionCreated(initialState(), INFO);
    expect(s.phase).toBe("voting");
    expect(s.session_id).toBe("abc123");
    expect(s.m).toBe(20);
    expect(s.plot_kind).toBe("boxplot");
  });

  it("clears leftovers from a previous session", () => {
    const stale = {
      ...sessionCreated(initialState(), INFO),
      my_pick: 4,
      tally: 9,
      banner: "old",
    };
    const s = sessionCreated(stale, { ...INFO, session_id: "next" });
    expect(s.my_pick).toBeNull();
    expect(s.tally).toBe(0);
    expect(s.banner).toBeNull();
  });
});

describe("pickBlocked", () => {
  const voting = sessionCreated(initialState(), INFO);

  it("blocks before a session exists", () => {
    expect(pickBlocked(initialState(), 3)).toBe("No session yet.");
  });

  it("blocks after reveal", () => {
    const done = revealed(voting, { K: 0 });
    expect(pickBlocked(done, 3)).toBe("Voting closed.");
  });

  it("blocks a second pick and names the first", () => {
    const picked = pickAccepted(voting, 7, 1);
    expect(pickBlocked(picked, 3)).toBe("You already picked panel 7.");
  });

  it("blocks out-of-range panels", () => {
    expect(pickBlocked(voting, 0)).toMatch(/out of range/);
    expect(pickBlocked(voting, 21)).toMatch(/out of range/);
    expect(pickBlocked(voting, 2.5)).toMatch(/out of range/);
  });

  it("allows a first in-range pick", () => {
    expect(pickBlocked(voting, 1)).toBeNull();
    expect(pickBlocked(voting, 20)).toBeNull();
  });
});

describe("pickAccepted", () => {
  const voting = sessionCreated(initialState(), INFO);

  it("records the pick and the tally", () => {
    const s = pickAccepted(voting, 5, 3);
    expect(s.my_pick).toBe(5);
    expect(s.tally).toBe(3);
  });

  it("never overwrites an existing pick", () => {
    const first = pickAccepted(voting, 5, 3);
    const second = pickAccepted(first, 9, 4);
    expect(second.my_pick).toBe(5);
  });
});

describe("pickRejected", () => {
  const voting = sessionCreated(initialState(), INFO);

  it("maps known error codes to plain banners", () => {
    expect(pickRejected(voting, "already_revealed").banner).toBe("Voting closed.");
    expect(pickRejected(voting, "duplicate_observer").banner).toBe(
      "This browser already voted.",
    );
  });

  it("falls back to showing the raw code", () => {
    expect(pickRejected(voting, "weird_code").banner).toBe("Vote not accepted (weird_code).");
  });

  it("leaves the pick untouched", () => {
    const picked = pickAccepted(voting, 2, 1);
    expect(pickRejected(picked, "duplicate_observer").my_pick).toBe(2);
  });
});

describe("tallyUpdated and revealed", () => {
  const voting = sessionCreated(initialState(), INFO);

  it("updates the tally only", () => {
    const s = tallyUpdated(voting, 11);
    expect(s.tally).toBe(11);
    expect(s.phase).toBe("voting");
  });

  it("reveal stores the result and closes voting", () => {
    const s = revealed(voting, { K: 5, x: 3, data_panel: 12, p: 0.0011581 });
    expect(s.phase).toBe("revealed");
    expect(s.result?.data_panel).toBe(12);
    expect(s.banner).toBeNull();
  });

  it("result exists only in the revealed phase", () => {
    expect(initialState().result).toBeNull();
    expect(voting.result).toBeNull();
    expect(revealed(voting, { K: 0 }).result).not.toBeNull();
  });
});
