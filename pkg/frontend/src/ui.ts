// DOM shell: renders the session view and wires user input to the
// controller. No model logic lives here.

import { ApiClient, AttrDict, Pose } from "./api.js";
import { SessionController, formatConsistency } from "./state.js";

const ATTRIBUTE_CHOICES: Record<string, string[]> = {
  category: ["dress", "shirt"],
  color: ["red", "blue", "green", "yellow", "black", "white"],
  sleeve: ["sleeveless", "short", "long"],
  hem: ["short", "long"],
  pattern: ["plain", "striped", "dotted"],
  brightness: ["dark", "bright"],
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (HTMLElement | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  for (const child of children) node.append(child);
  return node;
}

function pngSrc(b64: string): string {
  return `data:image/png;base64,${b64}`;
}

export class App {
  private controller: SessionController;
  private poses: Pose[] = [];
  private root: HTMLElement;

  private attrSelects: Record<string, HTMLSelectElement> = {};
  private editText = el("input", { type: "text", placeholder: "e.g. make it red and have long sleeves" });
  private seedField = el("input", { type: "text", placeholder: "random", class: "seed" });
  private samplerToggle = el("select", {});
  private stepsField = el("input", { type: "number", value: "50", min: "1", class: "steps" });
  private poseSelect = el("select", {});
  private submitButton = el("button", {}, "Apply edit");
  private undoButton = el("button", { class: "secondary" }, "Undo");
  private compareT1 = el("input", { type: "text", placeholder: "first instruction" });
  private compareT2 = el("input", { type: "text", placeholder: "second instruction" });
  private compareButton = el("button", { class: "secondary" }, "Compare orders");

  private history = el("div", { class: "history" });
  private stage = el("div", { class: "stage" });
  private comparePanel = el("div", { class: "compare-panel" });
  private toast = el("div", { class: "toast hidden" });
  private statusLine = el("div", { class: "status" });

  constructor(private api: ApiClient, mount: HTMLElement) {
    this.controller = new SessionController(api);
    this.root = mount;
    this.controller.subscribe(() => this.render());
  }

  async boot(): Promise<void> {
    this.buildLayout();
    try {
      const [health, poses] = await Promise.all([this.api.health(), this.api.poses()]);
      this.poses = poses.poses;
      this.statusLine.textContent = `model ${health.model_version}`;
      this.fillPoseSelect();
    } catch {
      this.showToast("Server unreachable; start the service and reload.");
    }
    this.render();
  }

  private buildLayout(): void {
    for (const opt of ["ddpm", "ddim"]) this.samplerToggle.append(el("option", { value: opt }, opt));

    const attrRow = el("div", { class: "attr-row" });
    for (const [field, values] of Object.entries(ATTRIBUTE_CHOICES)) {
      const select = el("select", {});
      for (const v of values) select.append(el("option", { value: v }, v));
      this.attrSelects[field] = select;
      attrRow.append(el("label", { class: "attr" }, field, select));
    }
    const startButton = el("button", {}, "Start session");
    startButton.addEventListener("click", () => void this.controller.start({ attrs: this.presetAttrs() }));

    const upload = el("input", { type: "file", accept: "image/png" });
    upload.addEventListener("change", () => void this.startFromUpload(upload));

    this.submitButton.addEventListener("click", () => void this.submit());
    this.editText.addEventListener("keydown", (e) => {
      if ((e as KeyboardEvent).key === "Enter") void this.submit();
    });
    this.undoButton.addEventListener("click", () => void this.controller.undo());
    this.compareButton.addEventListener("click", () =>
      void this.controller.compareOrders(this.compareT1.value, this.compareT2.value, this.seedValue()),
    );

    this.root.append(
      el("header", {}, el("h1", {}, "fashedit"), this.statusLine),
      el(
        "section",
        { class: "start card" },
        el("h2", {}, "Reference"),
        attrRow,
        el("div", { class: "row" }, startButton, el("label", { class: "upload" }, "or upload 64x64 PNG ", upload)),
      ),
      el(
        "section",
        { class: "workbench" },
        el("div", { class: "left card" }, el("h2", {}, "History"), this.history),
        el(
          "div",
          { class: "main card" },
          el("h2", {}, "Current"),
          this.stage,
          el(
            "div",
            { class: "controls" },
            this.editText,
            el("label", {}, "pose ", this.poseSelect),
            el("label", {}, "seed ", this.seedField),
            el("label", {}, "sampler ", this.samplerToggle),
            el("label", {}, "steps ", this.stepsField),
            this.submitButton,
            this.undoButton,
          ),
        ),
      ),
      el(
        "section",
        { class: "card" },
        el("h2", {}, "Order comparison"),
        el("div", { class: "row" }, this.compareT1, this.compareT2, this.compareButton),
        this.comparePanel,
      ),
      this.toast,
    );
  }

  private presetAttrs(): AttrDict {
    const out: AttrDict = {};
    for (const [field, select] of Object.entries(this.attrSelects)) out[field] = select.value;
    return out;
  }

  private async startFromUpload(input: HTMLInputElement): Promise<void> {
    const file = input.files?.[0];
    if (!file) return;
    const bytes = new Uint8Array(await file.arrayBuffer());
    let binary = "";
    for (const b of bytes) binary += String.fromCharCode(b);
    await this.controller.start({ image: btoa(binary) });
  }

  private seedValue(): number | null {
    const raw = this.seedField.value.trim();
    if (!raw) return null;
    const n = Number(raw);
    return Number.isFinite(n) ? Math.trunc(n) : null;
  }

  private async submit(): Promise<void> {
    const poseRaw = this.poseSelect.value;
    await this.controller.submitEdit({
      text: this.editText.value,
      seed: this.seedValue(),
      silhouette_id: poseRaw === "random" ? null : Number(poseRaw),
      sampler: this.samplerToggle.value,
      steps: Number(this.stepsField.value) || 50,
    });
  }

  private fillPoseSelect(): void {
    this.poseSelect.replaceChildren(el("option", { value: "random" }, "random"));
    for (const pose of this.poses) {
      this.poseSelect.append(el("option", { value: String(pose.template_id) }, `template ${pose.template_id}`));
    }
  }

  private showToast(message: string): void {
    this.toast.textContent = message;
    this.toast.classList.remove("hidden");
    setTimeout(() => this.toast.classList.add("hidden"), 4000);
  }

  private render(): void {
    const view = this.controller.view;
    const session = view.session;

    this.submitButton.toggleAttribute("disabled", view.pending || !session);
    this.undoButton.toggleAttribute("disabled", !this.controller.canUndo());
    this.compareButton.toggleAttribute("disabled", view.pending || !session);
    this.editText.toggleAttribute("disabled", view.pending);

    this.history.replaceChildren();
    if (session) {
      session.rounds.forEach((round, i) => {
        const thumb = el("figure", { class: "thumb" });
        thumb.append(el("img", { src: pngSrc(round.image), alt: `round ${i}` }));
        thumb.append(el("figcaption", {}, i === 0 ? "reference" : `${i}: ${round.instruction ?? ""}`));
        this.history.append(thumb);
      });
      const last = session.rounds[session.rounds.length - 1];
      if (last) {
        const caption = last.instruction
          ? `round ${session.rounds.length - 1}: ${last.instruction} (seed ${last.seed}, ${last.latency_ms} ms)`
          : "reference";
        this.stage.replaceChildren(el("img", { src: pngSrc(last.image), class: "big" }), el("p", {}, caption));
      }
    } else {
      this.stage.replaceChildren(el("p", {}, "Start a session to begin editing."));
    }

    this.comparePanel.replaceChildren();
    if (view.compare) {
      const score = formatConsistency(view.compare.consistency);
      this.comparePanel.append(
        el("div", { class: "pair" },
          el("figure", {}, el("img", { src: pngSrc(view.compare.image_a), class: "big" }), el("figcaption", {}, "t1 then t2")),
          el("figure", {}, el("img", { src: pngSrc(view.compare.image_b), class: "big" }), el("figcaption", {}, "t2 then t1")),
        ),
        el("p", { class: "score" }, `consistency ${score}`),
      );
    }

    if (view.lastError) this.showToast(view.lastError);
  }
}
