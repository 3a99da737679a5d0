/** Runtime configuration, overridable from a global set by config.js. */

export interface AppConfig {
  /** Root URL of the query service (no trailing slash, no /api suffix). */
  serverUrl: string;
  /** Raster tile URL template with {z}/{x}/{y} placeholders; empty disables tiles. */
  tileTemplate: string;
}

declare global {
  interface Window {
    HISTOMAP_CONFIG?: Partial<AppConfig>;
  }
}

const DEFAULTS: AppConfig = {
  serverUrl: "http://127.0.0.1:8531",
  tileTemplate: "https://tile.openstreetmap.org/{z}/{x}/{y}.png",
};

export function loadConfig(): AppConfig {
  const overrides = typeof window !== "undefined" ? window.HISTOMAP_CONFIG : undefined;
  return { ...DEFAULTS, ...(overrides ?? {}) };
}
