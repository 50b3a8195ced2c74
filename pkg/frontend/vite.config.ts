import { defineConfig } from "vitest/config";

// During development the segmentation service runs separately
// (`ctxseg serve --checkpoint ...`); proxy its API so the page can use
// same-origin requests. Override the target with CTXSEG_SERVER.
const server = process.env.CTXSEG_SERVER ?? "http://127.0.0.1:8000";

export default defineConfig({
  server: {
    proxy: {
      "/v1": { target: server, changeOrigin: true },
    },
  },
  test: {
    environment: "jsdom",
    setupFiles: ["tests/setup.ts"],
    testTimeout: 15000,
  },
});
