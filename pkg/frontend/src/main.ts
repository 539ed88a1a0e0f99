import { ApiClient } from "./api.js";
import { App } from "./app.js";

const root = document.getElementById("app");
if (root) {
  new App(root, new ApiClient()).start().catch((error) => {
    console.error("configforge ui failed to start", error);
  });
}
