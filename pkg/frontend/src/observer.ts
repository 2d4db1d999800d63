const STORAGE_KEY = "lineuplab-observer-tag";

type TagStorage = Pick<Storage, "getItem" | "setItem">;

export function randomTag(): string {
  const bytes = new Uint8Array(12);
  crypto.getRandomValues(bytes);
  return Array.from(bytes, (b) => b.toString(16).padStart(2, "0")).join("");
}

/** Stable anonymous identity for this browser; one vote per tag is
 * enforced server-side, so persisting it keeps reloads honest. */
export function observerTag(storage: TagStorage): string {
  let tag = storage.getItem(STORAGE_KEY);
  if (!tag) {
    tag = randomTag();
    storage.setItem(STORAGE_KEY, tag);
  }
  return tag;
}
