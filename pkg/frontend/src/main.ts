import { ApiClient } from "./api.js";
import { App } from "./ui.js";

const mount = document.getElementById("app");
if (!mount) throw new Error("missing #app mount point");

// same-origin by default; override for a detached static host
const base = (window as unknown as { FASHEDIT_API?: string }).FASHEDIT_API ?? "";
void new App(new ApiClient(base), mount).boot();
