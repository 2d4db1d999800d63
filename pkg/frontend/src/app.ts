import { Api, ApiError } from "./api.js";
import { revealSummary } from "./format.js";
import { buildSpec, formProblem, type SpecForm } from "./spec.js";
import * as transitions from "./state.js";
import { highlightPanel, panelFromTarget } from "./svg.js";
import type { ViewState } from "./types.js";

const POLL_MS = 2000;

interface Elements {
  setupSection: HTMLElement;
  votingSection: HTMLElement;
  setupForm: HTMLFormElement;
  csvFile: HTMLInputElement;
  kind: HTMLSelectElement;
  response: HTMLInputElement;
  group: HTMLInputElement;
  predictor: HTMLInputElement;
  degree: HTMLInputElement;
  m: HTMLInputElement;
  seed: HTMLInputElement;
  rorschach: HTMLInputElement;
  setupError: HTMLElement;
  joinId: HTMLInputElement;
  joinButton: HTMLButtonElement;
  sessionLabel: HTMLElement;
  lineup: HTMLElement;
  tally: HTMLElement;
  banner: HTMLElement;
  adminToken: HTMLInputElement;
  revealButton: HTMLButtonElement;
  resultText: HTMLElement;
}

export class App {
  private view: ViewState = transitions.initialState();
  private svgMarkup = "";
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(
    private readonly api: Api,
    private readonly el: Elements,
    private readonly observer: string,
  ) {}

  bind(): void {
    this.el.setupForm.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.createSession();
    });
    this.el.joinButton.addEventListener("click", () => {
      void this.joinSession(this.el.joinId.value.trim());
    });
    this.el.lineup.addEventListener("click", (event) => {
      const panel = panelFromTarget(event.target as Element);
      if (panel !== null) void this.pickPanel(panel);
    });
    this.el.revealButton.addEventListener("click", () => {
      void this.revealView();
    });
    const fromHash = /^#s=(.+)$/.exec(window.location.hash);
    if (fromHash) void this.joinSession(fromHash[1]!);
  }

  private async createSession(): Promise<void> {
    const file = this.el.csvFile.files?.[0];
    if (!file) {
      this.el.setupError.textContent = "Choose a CSV file first.";
      return;
    }
    const form: SpecForm = {
      kind: this.el.kind.value,
      response: this.el.response.value.trim(),
      group: this.el.group.value.trim() || undefined,
      predictor: this.el.predictor.value.trim() || undefined,
      degree: Number(this.el.degree.value) || 1,
      m: Number(this.el.m.value) || 20,
      seed: Number(this.el.seed.value) || 0,
      rorschach: this.el.rorschach.checked,
    };
    const problem = formProblem(form);
    if (problem) {
      this.el.setupError.textContent = problem;
      return;
    }
    try {
      const info = await this.api.createSession(file, buildSpec(form));
      this.el.adminToken.value = info.admin_token;
      window.location.hash = `s=${info.session_id}`;
      this.view = transitions.sessionCreated(this.view, info);
      await this.loadLineup();
      this.startPolling();
      this.render();
    } catch (error) {
      this.el.setupError.textContent =
        error instanceof ApiError ? `Could not create session (${error.code}).` : String(error);
    }
  }

  private async joinSession(sessionId: string): Promise<void> {
    if (!sessionId) return;
    try {
      const status = await this.api.status(sessionId);
      this.view = transitions.sessionCreated(this.view, {
        session_id: sessionId,
        m: status.m,
        plot_kind: status.plot_kind,
        admin_token: "",
      });
      this.view = transitions.tallyUpdated(this.view, status.responses_so_far);
      if (status.revealed) {
        this.view = { ...this.view, phase: "revealed" };
      }
      window.location.hash = `s=${sessionId}`;
      await this.loadLineup();
      if (!status.revealed) this.startPolling();
      this.render();
    } catch (error) {
      this.el.setupError.textContent =
        error instanceof ApiError && error.status === 404
          ? "No such session."
          : String(error);
    }
  }

  private async loadLineup(): Promise<void> {
    if (!this.view.session_id) return;
    this.svgMarkup = await this.api.lineupSvg(this.view.session_id);
  }

  async pickPanel(panel: number): Promise<void> {
    const blocked = transitions.pickBlocked(this.view, panel);
    if (blocked) {
      this.view = { ...this.view, banner: blocked };
      this.render();
      return;
    }
    try {
      const reply = await this.api.submitResponse(this.view.session_id!, this.observer, panel);
      this.view = transitions.pickAccepted(this.view, panel, reply.responses_so_far);
    } catch (error) {
      if (error instanceof ApiError) {
        this.view = transitions.pickRejected(this.view, error.code);
      } else {
        this.view = { ...this.view, banner: String(error) };
      }
    }
    this.render();
  }

  async revealView(): Promise<void> {
    const token = this.el.adminToken.value.trim();
    if (!this.view.session_id || !token) {
      this.view = { ...this.view, banner: "Reveal needs the admin token." };
      this.render();
      return;
    }
    try {
      const result = await this.api.reveal(this.view.session_id, token);
      this.view = transitions.revealed(this.view, result);
      this.stopPolling();
    } catch (error) {
      if (error instanceof ApiError) {
        this.view = { ...this.view, banner: `Reveal failed (${error.code}).` };
      } else {
        this.view = { ...this.view, banner: String(error) };
      }
    }
    this.render();
  }

  private startPolling(): void {
    this.stopPolling();
    this.timer = setInterval(() => void this.poll(), POLL_MS);
  }

  private stopPolling(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  private async poll(): Promise<void> {
    if (!this.view.session_id) return;
    try {
      const status = await this.api.status(this.view.session_id);
      this.view = transitions.tallyUpdated(this.view, status.responses_so_far);
      if (status.revealed && this.view.phase !== "revealed") {
        // someone else's reveal; without the token the numbers stay on
        // the instructor's screen
        this.view = { ...this.view, phase: "revealed" };
        this.stopPolling();
      }
      this.render();
    } catch {
      // transient network failure; next tick retries
    }
  }

  render(): void {
    const view = this.view;
    this.el.setupSection.hidden = view.phase !== "setup";
    this.el.votingSection.hidden = view.phase === "setup";
    this.el.sessionLabel.textContent = view.session_id
      ? `Session ${view.session_id} (${view.plot_kind}, ${view.m} panels)`
      : "";
    this.el.tally.textContent = `${view.tally} response${view.tally === 1 ? "" : "s"} so far`;
    this.el.banner.textContent = view.banner ?? "";
    this.el.banner.hidden = !view.banner;

    let markup = this.svgMarkup;
    if (view.phase === "revealed" && view.result?.data_panel !== undefined) {
      markup = highlightPanel(markup, view.result.data_panel);
    }
    if (this.el.lineup.innerHTML !== markup) {
      this.el.lineup.innerHTML = markup;
    }
    this.el.lineup.classList.toggle("voting", view.phase === "voting");
    if (view.my_pick !== null) {
      this.el.lineup.querySelector(`#panel-${view.my_pick}`)?.classList.add("panel-mine");
    }

    if (view.phase === "revealed") {
      this.el.resultText.textContent = view.result
        ? revealSummary(view.result)
        : "Voting closed. The result is on the instructor's screen.";
    } else {
      this.el.resultText.textContent = "";
    }
  }

  /** Test hook: current immutable view state. */
  get state(): ViewState {
    return this.view;
  }
}

export function mount(doc: Document, api: Api, observer: string): App {
  const get = <T extends HTMLElement>(id: string): T => {
    const node = doc.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
  };
  const app = new App(api, {
    setupSection: get("setup-section"),
    votingSection: get("voting-section"),
    setupForm: get<HTMLFormElement>("setup-form"),
    csvFile: get<HTMLInputElement>("csv-file"),
    kind: get<HTMLSelectElement>("plot-kind"),
    response: get<HTMLInputElement>("response-col"),
    group: get<HTMLInputElement>("group-col"),
    predictor: get<HTMLInputElement>("predictor-col"),
    degree: get<HTMLInputElement>("degree"),
    m: get<HTMLInputElement>("panel-count"),
    seed: get<HTMLInputElement>("seed"),
    rorschach: get<HTMLInputElement>("rorschach"),
    setupError: get("setup-error"),
    joinId: get<HTMLInputElement>("join-id"),
    joinButton: get<HTMLButtonElement>("join-button"),
    sessionLabel: get("session-label"),
    lineup: get("lineup"),
    tally: get("tally"),
    banner: get("banner"),
    adminToken: get<HTMLInputElement>("admin-token"),
    revealButton: get<HTMLButtonElement>("reveal-button"),
    resultText: get("result-text"),
  }, observer);
  app.bind();
  return app;
}
