// Runtime configuration; edit to point the UI at your service and tiles.
window.HISTOMAP_CONFIG = {
  serverUrl: "http://127.0.0.1:8531",
  tileTemplate: "https://tile.openstreetmap.org/{z}/{x}/{y}.png",
};
