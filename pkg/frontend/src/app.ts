/**
 * The game shell: wires the API client, the state container, and the screen
 * renderer together. Keyboard-first (arrow keys + enter), with mouse
 * equivalents for every control.
 */

import { ApiClient, BusyError } from './api.js';
import { dialogueFor } from './dialogue.js';
import { lint, type Diagnostic } from './scriptLint.js';
import { render } from './screens.js';
import { ShiftDial } from './shiftDial.js';
import { GameState } from './state.js';

export class App {
  readonly state = new GameState();
  private readonly api: ApiClient;
  private dial: ShiftDial | null = null;
  private diagnostics: Diagnostic[] = [];
  private retryable: (() => Promise<void>) | null = null;
  private showRetry = false;

  constructor(
    private readonly root: HTMLElement,
    baseUrl = '',
  ) {
    this.api = new ApiClient(baseUrl);
    this.root.addEventListener('click', (event) => this.onClick(event));
    this.root.addEventListener('input', (event) => this.onInput(event));
    this.root.ownerDocument.addEventListener('keydown', (event) => this.onKey(event));
    this.render();
  }

  get dialShift(): number {
    return this.dial?.shift ?? 0;
  }

  render(): void {
    render(this.root, this.state, this.dialShift, this.diagnostics, this.showRetry);
  }

  /** Run one API interaction; failures become character dialogue. */
  private async guard(action: () => Promise<void>): Promise<void> {
    try {
      this.retryable = action;
      await action();
      this.retryable = null;
      this.showRetry = false;
    } catch (error) {
      if (error instanceof BusyError) return; // button mashing; ignore
      const line = dialogueFor(error);
      this.state.dialogue = line.text;
      this.showRetry = line.retry;
    }
    this.render();
  }

  async login(playerId: string): Promise<void> {
    await this.guard(async () => {
      this.state.applySession(await this.api.openSession(playerId));
      this.state.applyProgress(await this.api.fetchProgress());
    });
  }

  async openLevel(levelId: string): Promise<void> {
    await this.guard(async () => {
      const started = await this.api.startLevel(levelId);
      this.state.applyStart(started);
      if (started.kind === 'CAESAR') {
        this.dial = new ShiftDial(String(started.challenge.ciphertext ?? ''));
        this.state.draft = this.dial.preview();
      } else {
        this.dial = null;
      }
      this.diagnostics = [];
    });
  }

  beginPuzzle(): void {
    this.state.beginPuzzle();
    this.render();
  }

  dialTurn(direction: 'left' | 'right'): void {
    if (this.dial === null || this.state.screen !== 'puzzle') return;
    this.dial.turn(direction);
    this.state.draft = this.dial.preview();
    this.render();
  }

  setDraft(text: string): void {
    this.state.draft = text;
    if (this.state.active?.answer_form === 'script') {
      this.diagnostics = lint(text);
      this.refreshDiagnostics();
    }
  }

  async submit(): Promise<void> {
    if (this.state.active === null) return;
    await this.guard(async () => {
      this.state.applyAttempt(await this.api.submitAttempt(this.state.draft));
    });
  }

  async hint(): Promise<void> {
    await this.guard(async () => {
      this.state.applyHint(await this.api.requestHint());
    });
  }

  async showCodex(): Promise<void> {
    await this.guard(async () => {
      this.state.applyCodex((await this.api.fetchCodex()).entries);
    });
  }

  async showMap(): Promise<void> {
    await this.guard(async () => {
      this.state.applyProgress(await this.api.fetchProgress());
    });
  }

  async continueAfterSuccess(): Promise<void> {
    const next = this.state.success?.nextLevel ?? null;
    if (next !== null) {
      await this.openLevel(next);
    } else {
      await this.showMap();
    }
  }

  async retryLast(): Promise<void> {
    const action = this.retryable;
    if (action !== null) await this.guard(action);
  }

  /** Keep the textarea (and the player's cursor) while updating lint marks. */
  private refreshDiagnostics(): void {
    const list = this.root.querySelector('#diagnostics');
    if (list === null) return;
    list.innerHTML = this.diagnostics
      .map(
        (d) =>
          `<li class="diagnostic" data-position="${d.position}">` +
          `${d.kind} at ${d.position}: ${d.message
            .replaceAll('&', '&amp;')
            .replaceAll('<', '&lt;')}</li>`,
      )
      .join('');
  }

  private onClick(event: Event): void {
    const target = event.target as HTMLElement | null;
    if (target === null || target.tagName !== 'BUTTON') return;
    const id = target.id;
    if (id === 'login') {
      const input = this.root.querySelector<HTMLInputElement>('#player-id');
      const playerId = input?.value.trim() ?? '';
      if (playerId.length > 0) void this.login(playerId);
      return;
    }
    if (id.startsWith('level-')) {
      void this.openLevel(id.slice('level-'.length));
      return;
    }
    switch (id) {
      case 'begin':
        this.beginPuzzle();
        break;
      case 'dial-left':
        this.dialTurn('left');
        break;
      case 'dial-right':
        this.dialTurn('right');
        break;
      case 'submit':
        void this.submit();
        break;
      case 'hint':
        void this.hint();
        break;
      case 'open-codex':
        void this.showCodex();
        break;
      case 'back-to-map':
        void this.showMap();
        break;
      case 'continue':
        void this.continueAfterSuccess();
        break;
      case 'retry':
        void this.retryLast();
        break;
    }
  }

  private onInput(event: Event): void {
    const target = event.target as HTMLElement | null;
    if (target === null) return;
    if (target.id === 'script-input') {
      this.setDraft((target as HTMLTextAreaElement).value);
    } else if (target.id === 'answer-input') {
      this.setDraft((target as HTMLInputElement).value);
    }
  }

  private onKey(event: KeyboardEvent): void {
    if (!this.root.isConnected) return; // unmounted shell; keys are not ours
    if (this.state.screen === 'puzzle') {
      if (event.key === 'ArrowLeft') {
        this.dialTurn('left');
      } else if (event.key === 'ArrowRight') {
        this.dialTurn('right');
      } else if (event.key === 'Enter' && this.state.active?.answer_form !== 'script') {
        void this.submit();
      }
    } else if (this.state.screen === 'briefing' && event.key === 'Enter') {
      this.beginPuzzle();
    } else if (this.state.screen === 'success' && event.key === 'Enter') {
      void this.continueAfterSuccess();
    }
  }
}
