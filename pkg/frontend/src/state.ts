/**
 * Client game state. Mirrors server truth: every transition is driven by an
 * API response, and nothing solution-bearing is ever stored (the server
 * never sends it, and the audit in the e2e suite checks dumps of this
 * object). Draft answers live here too so a failed network call never
 * loses the player's work.
 */

import type {
  AttemptResponse,
  CodexEntry,
  HintResponse,
  ProgressResponse,
  SessionResponse,
  StartResponse,
} from './api.js';

export type Screen = 'login' | 'briefing' | 'puzzle' | 'success' | 'codex' | 'map';

export interface SuccessView {
  levelId: string;
  message: string;
  score: number;
  storyOutro: string;
  codexUpdates: string[];
  nextLevel: string | null;
}

export class GameState {
  screen: Screen = 'login';
  playerId: string | null = null;
  current: string | null = null;
  levels: Record<string, 'locked' | 'unlocked' | 'completed'> = {};
  codexIds: string[] = [];

  /** The level as served; present only between start and completion. */
  active: StartResponse | null = null;
  attempts = 0;
  hintsTaken = 0;

  /** What the player is composing right now (dial shift, script text, ...). */
  draft = '';
  lastFeedback: AttemptResponse | null = null;
  lastHint: HintResponse | null = null;
  /** Character dialogue for the most recent non-verdict event. */
  dialogue = '';

  success: SuccessView | null = null;
  codexEntries: CodexEntry[] = [];
  progress: ProgressResponse | null = null;

  applySession(response: SessionResponse): void {
    this.playerId = response.player_id;
    this.current = response.current;
    this.levels = { ...response.levels };
    this.codexIds = [...response.codex];
    this.screen = 'map';
  }

  applyStart(response: StartResponse): void {
    this.active = response;
    this.attempts = response.attempts;
    this.hintsTaken = response.hints_taken;
    this.draft = '';
    this.lastFeedback = null;
    this.lastHint = null;
    this.dialogue = '';
    this.success = null;
    this.screen = 'briefing';
  }

  beginPuzzle(): void {
    if (this.active !== null) this.screen = 'puzzle';
  }

  applyAttempt(response: AttemptResponse): void {
    this.lastFeedback = response;
    this.attempts = response.attempts;
    if (response.verdict === 'correct' && this.active !== null) {
      const levelId = this.active.level_id;
      this.levels[levelId] = 'completed';
      this.current = response.next_level ?? null;
      if (this.current !== null && this.levels[this.current] === 'locked') {
        this.levels[this.current] = 'unlocked';
      }
      for (const conceptId of response.codex_updates ?? []) {
        if (!this.codexIds.includes(conceptId)) this.codexIds.push(conceptId);
      }
      this.success = {
        levelId,
        message: response.message,
        score: response.score ?? 0,
        storyOutro: response.story_outro ?? '',
        codexUpdates: response.codex_updates ?? [],
        nextLevel: response.next_level ?? null,
      };
      this.active = null;
      this.draft = '';
      this.screen = 'success';
    }
  }

  applyHint(response: HintResponse | null): void {
    if (response === null) {
      this.dialogue = 'No new advice yet. Keep working the signal.';
    } else {
      this.lastHint = response;
      this.hintsTaken = response.hints_taken;
      this.dialogue = response.text;
    }
  }

  applyCodex(entries: CodexEntry[]): void {
    this.codexEntries = entries;
    this.screen = 'codex';
  }

  applyProgress(response: ProgressResponse): void {
    this.progress = response;
    this.current = response.current;
    for (const row of response.levels) {
      this.levels[row.id] = row.status;
    }
    this.screen = 'map';
  }

  /**
   * Serializable snapshot for the solution-leak audit: if a forbidden key
   * ever shows up in here, the server leaked it or the client computed it.
   */
  dump(): string {
    return JSON.stringify({
      screen: this.screen,
      playerId: this.playerId,
      current: this.current,
      levels: this.levels,
      codexIds: this.codexIds,
      active: this.active,
      attempts: this.attempts,
      hintsTaken: this.hintsTaken,
      draft: this.draft,
      lastFeedback: this.lastFeedback,
      lastHint: this.lastHint,
      dialogue: this.dialogue,
      success: this.success,
      codexEntries: this.codexEntries,
      progress: this.progress,
    });
  }
}
