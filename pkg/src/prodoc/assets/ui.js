"use strict";
(() => {
  // src/api.ts
  var HttpError = class extends Error {
    constructor(status, body) {
      super(`HTTP ${status}: ${body}`);
      this.status = status;
    }
  };
  var Api = class {
    constructor(base = "", fetcher = (url, init) => fetch(url, init)) {
      this.base = base;
      this.fetcher = fetcher;
    }
    async search(query) {
      const url = `${this.base}/api/search?for=${encodeURIComponent(query)}`;
      return await this.json(url);
    }
    async edit(indicator) {
      const url = `${this.base}/edit?pred=${encodeURIComponent(indicator)}`;
      const resp = await this.fetcher(url, { method: "POST" });
      const body = await resp.text();
      if (!resp.ok) throw new HttpError(resp.status, body);
      return body;
    }
    async reload() {
      const resp = await this.fetcher(`${this.base}/reload`, { method: "POST" });
      if (!resp.ok) throw new HttpError(resp.status, await resp.text());
      return await resp.json();
    }
    async json(url) {
      const resp = await this.fetcher(url);
      if (!resp.ok) throw new HttpError(resp.status, await resp.text());
      return resp.json();
    }
  };

  // src/controller.ts
  var realScheduler = {
    set: (ms, fn) => setTimeout(fn, ms),
    clear: (id) => clearTimeout(id)
  };
  var DEBOUNCE_MS = 150;
  var SearchBox = class {
    constructor(api, view, scheduler = realScheduler, debounceMs = DEBOUNCE_MS) {
      this.api = api;
      this.view = view;
      this.scheduler = scheduler;
      this.debounceMs = debounceMs;
      this.query = "";
      this.timer = null;
      this.inFlight = false;
      this.pending = null;
    }
    type(query) {
      this.query = query;
      if (this.timer !== null) {
        this.scheduler.clear(this.timer);
        this.timer = null;
      }
      if (query === "") {
        this.pending = null;
        this.view.clear();
        return;
      }
      this.timer = this.scheduler.set(this.debounceMs, () => {
        this.timer = null;
        void this.request(query);
      });
    }
    async request(query) {
      if (this.inFlight) {
        this.pending = query;
        return;
      }
      this.inFlight = true;
      try {
        const hits = await this.api.search(query);
        if (query === this.query) this.view.renderHits(hits);
      } catch (err) {
        if (query === this.query) this.view.showError(`search failed: ${err}`);
      } finally {
        this.inFlight = false;
        const next = this.pending;
        this.pending = null;
        if (next !== null && next === this.query && next !== query) {
          void this.request(next);
        }
      }
    }
  };
  var Actions = class {
    constructor(api, view) {
      this.api = api;
      this.view = view;
      this.lastGeneration = null;
      this.editsHidden = false;
      this.reloadInFlight = false;
      this.reloadQueued = false;
    }
    async edit(indicator) {
      if (this.editsHidden) return;
      try {
        this.view.confirm(await this.api.edit(indicator));
      } catch (err) {
        if (err instanceof HttpError && err.status === 403) {
          this.editsHidden = true;
          this.view.hideEditButtons();
        } else {
          this.view.banner(`edit failed: ${err}`);
        }
      }
    }
    async reload() {
      if (this.reloadInFlight) {
        this.reloadQueued = true;
        return;
      }
      this.reloadInFlight = true;
      try {
        const result = await this.api.reload();
        this.lastGeneration = result.generation;
        this.view.refreshPage();
      } catch (err) {
        this.view.banner(`reload failed: ${err}`);
      } finally {
        this.reloadInFlight = false;
        if (this.reloadQueued) {
          this.reloadQueued = false;
          void this.reload();
        }
      }
    }
  };

  // src/dom.ts
  function baseFrom(doc) {
    const script = doc.querySelector('script[src$="ui.js"]');
    if (!script) return "";
    const url = new URL(script.src, doc.baseURI);
    return url.pathname.replace(/\/assets\/ui\.js$/, "");
  }
  function banner(doc, cls, message, ttlMs = 0) {
    doc.querySelector(`.${cls}`)?.remove();
    const el = doc.createElement("div");
    el.className = cls;
    el.textContent = message;
    doc.body.insertBefore(el, doc.body.firstChild);
    if (ttlMs > 0) setTimeout(() => el.remove(), ttlMs);
  }
  function hitLink(base, hit) {
    const page = `${base}/doc/${hit.file}`;
    return hit.kind === "pred" ? `${page}#${hit.target}` : page;
  }
  function searchView(doc, form, base) {
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
      }
    };
  }
  function actionView(doc) {
    return {
      confirm: (message) => banner(doc, "ui-note", message, 2500),
      banner: (message) => banner(doc, "ui-banner", message),
      hideEditButtons() {
        doc.querySelectorAll("form.edit-form").forEach(
          (form) => {
            form.hidden = true;
          }
        );
      },
      refreshPage() {
        doc.defaultView?.location.reload();
      }
    };
  }
  function enhance(doc, client, overrides) {
    const base = baseFrom(doc);
    const api = client ?? new Api(base);
    const actions = new Actions(api, { ...actionView(doc), ...overrides });
    let search = null;
    const form = doc.querySelector("form.search-form");
    const input = form?.querySelector('input[name="for"]');
    if (form && input) {
      search = new SearchBox(api, searchView(doc, form, base));
      const box = search;
      input.autocomplete = "off";
      input.addEventListener("input", () => box.type(input.value));
    }
    doc.querySelectorAll("form.edit-form").forEach((form2) => {
      const button = form2.querySelector("button.edit-button");
      const indicator = button?.dataset.pred;
      if (!indicator) return;
      form2.addEventListener("submit", (event) => {
        event.preventDefault();
        void actions.edit(indicator);
      });
    });
    doc.querySelector("form.reload-form")?.addEventListener("submit", (event) => {
      event.preventDefault();
      void actions.reload();
    });
    return { search, actions };
  }

  // src/main.ts
  if (typeof document !== "undefined") {
    enhance(document);
  }
})();
