// Progressive enhancement of server-rendered pages.  Every feature
// here intercepts markup that already works without script: the search
// form, the per-predicate edit forms and the reload form.

import { ActionClient, Api, SearchClient, SearchHit } from "./api";
import { Actions, ActionView, SearchBox, SearchView } from "./controller";

export type Client = SearchClient & ActionClient;

export function baseFrom(doc: Document): string {
  const script = doc.querySelector<HTMLScriptElement>('script[src$="ui.js"]');
  if (!script) return "";
  const url = new URL(script.src, doc.baseURI);
  return url.pathname.replace(/\/assets\/ui\.js$/, "");
}

function banner(doc: Document, cls: string, message: string, ttlMs = 0): void {
  doc.querySelector(`.${cls}`)?.remove();
  const el = doc.createElement("div");
  el.className = cls;
  el.textContent = message;
  doc.body.insertBefore(el, doc.body.firstChild);
  if (ttlMs > 0) setTimeout(() => el.remove(), ttlMs);
}

function hitLink(base: string, hit: SearchHit): string {
  const page = `${base}/doc/${hit.file}`;
  return hit.kind === "pred" ? `${page}#${hit.target}` : page;
}

function searchView(doc: Document, form: HTMLFormElement,
                    base: string): SearchView {
  const drop = doc.createElement("ul");
  drop.className = "search-drop";
  drop.hidden = true;
  form.insertAdjacentElement("afterend", drop);
  return {
    renderHits(hits) {
      drop.textContent = "";
      for (const hit of hits) {
        const li = doc.createElement("li");
        li.className = hit.public ? "hit" : "hit private";
        const link = doc.createElement("a");
        link.href = hitLink(base, hit);
        link.textContent = hit.target;
        const summary = doc.createElement("span");
        summary.className = "summary";
        summary.textContent = hit.summary;
        li.append(link, " ", summary);
        drop.appendChild(li);
      }
      drop.hidden = hits.length === 0;
    },
    clear() {
      drop.textContent = "";
      drop.hidden = true;
    },
    showError(message) {
      banner(doc, "ui-banner", message);
    },
  };
}

function actionView(doc: Document): ActionView {
  return {
    confirm: (message) => banner(doc, "ui-note", message, 2500),
    banner: (message) => banner(doc, "ui-banner", message),
    hideEditButtons() {
      doc.querySelectorAll<HTMLFormElement>("form.edit-form").forEach(
        (form) => { form.hidden = true; });
    },
    refreshPage() {
      doc.defaultView?.location.reload();
    },
  };
}

export interface Enhanced {
  search: SearchBox | null;
  actions: Actions;
}

export function enhance(doc: Document, client?: Client,
                        overrides?: Partial<ActionView>): Enhanced {
  const base = baseFrom(doc);
  const api = client ?? new Api(base);
  const actions = new Actions(api, { ...actionView(doc), ...overrides });

  let search: SearchBox | null = null;
  const form = doc.querySelector<HTMLFormElement>("form.search-form");
  const input = form?.querySelector<HTMLInputElement>('input[name="for"]');
  if (form && input) {
    search = new SearchBox(api, searchView(doc, form, base));
    const box = search;
    input.autocomplete = "off";
    input.addEventListener("input", () => box.type(input.value));
  }

  doc.querySelectorAll<HTMLFormElement>("form.edit-form").forEach((form) => {
    const button = form.querySelector<HTMLButtonElement>("button.edit-button");
    const indicator = button?.dataset.pred;
    if (!indicator) return;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void actions.edit(indicator);
    });
  });

  doc.querySelector<HTMLFormElement>("form.reload-form")
    ?.addEventListener("submit", (event) => {
      event.preventDefault();
      void actions.reload();
    });

  return { search, actions };
}
