import { Api } from "./api.js";
import { mount } from "./app.js";
import { observerTag } from "./observer.js";

mount(document, new Api(""), observerTag(window.localStorage));
