import { App, grabRefs } from "./app.js";

const app = new App(grabRefs(document));
app.mount();
