import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    environment: "node",
    // the integration test boots the real session service
    testTimeout: 30_000,
    hookTimeout: 30_000,
  },
});
