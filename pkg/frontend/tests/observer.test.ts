import { describe, expect, it } from "vitest";

import { observerTag, randomTag } from "../src/observer.js";

function fakeStorage(): { getItem(k: string): string | null; setItem(k: string, v: string): void } {
  const map = new Map<string, string>();
  return {
    getItem: (k) => map.get(k) ?? null,
    setItem: (k, v) => void map.set(k, v),
  };
}

describe("randomTag", () => {
  it("is 24 lowercase hex characters", () => {
    expect(randomTag()).toMatch(/^[0-9a-f]{24}$/);
  });

  it("is not constant", () => {
    const tags = new Set(Array.from({ length: 20 }, randomTag));
    expect(tags.size).toBe(20);
  });
});

describe("observerTag", () => {
  it("creates a tag once and returns it on later calls", () => {
    const storage = fakeStorage();
    const first = observerTag(storage);
    expect(first).toMatch(/^[0-9a-f]{24}$/);
    expect(observerTag(storage)).toBe(first);
  });

  it("respects a tag already in storage", () => {
    const storage = fakeStorage();
    storage.setItem("lineuplab-observer-tag", "cafe".repeat(6));
    expect(observerTag(storage)).toBe("cafe".repeat(6));
  });
});
