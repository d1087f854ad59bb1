// Entry point: mount the composer against the service named by ?api=,
// defaulting to a local planepoem server.

import { ApiClient } from "./api.js";
import { Composer } from "./composer.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("api") ?? "http://127.0.0.1:8642";

const root = document.getElementById("app");
if (root === null) throw new Error("missing #app element");

const composer = new Composer(root, new ApiClient(baseUrl));
void composer.start();
