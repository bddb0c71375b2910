/**
 * DOM rendering, one function per screen. Rendering is a pure projection of
 * GameState; all behavior is delegated to the Actions the app wires in.
 * Element ids are part of the client's test contract.
 */

import type { GameState } from './state.js';
import type { Diagnostic } from './scriptLint.js';

export interface Actions {
  login(playerId: string): void;
  openLevel(levelId: string): void;
  beginPuzzle(): void;
  dialTurn(direction: 'left' | 'right'): void;
  setDraft(text: string): void;
  submit(): void;
  hint(): void;
  showCodex(): void;
  showMap(): void;
  continueAfterSuccess(): void;
  retryLast(): void;
}

export function escapeHtml(text: string): string {
  return text
    .replaceAll('&', '&amp;')
    .replaceAll('<', '&lt;')
    .replaceAll('>', '&gt;')
    .replaceAll('"', '&quot;');
}

function button(id: string, label: string, disabled = false): string {
  return `<button id="${id}"${disabled ? ' disabled' : ''}>${escapeHtml(label)}</button>`;
}

function dialoguePanel(state: GameState, retry: boolean): string {
  if (!state.dialogue) return '<div id="dialogue" hidden></div>';
  const retryButton = retry ? button('retry', 'Re-send') : '';
  return `<div id="dialogue" class="dialogue">${escapeHtml(state.dialogue)}${retryButton}</div>`;
}

function renderLogin(): string {
  return `
    <section data-screen="login">
      <h1>cipherquest</h1>
      <p>Report in, agent.</p>
      <input id="player-id" placeholder="codename" autocomplete="off">
      ${button('login', 'Open channel')}
    </section>`;
}

function renderMap(state: GameState): string {
  const rows = (state.progress?.levels ?? []).map((row) => {
    const status = state.levels[row.id] ?? row.status;
    const score = row.best_score !== undefined ? ` — best ${row.best_score}` : '';
    const open =
      status === 'locked'
        ? '<span class="locked">locked</span>'
        : button(`level-${row.id}`, status === 'completed' ? 'replay' : 'start');
    return `<li data-level="${row.id}" data-status="${status}">
      <span class="level-name">${escapeHtml(row.id)}</span>
      <span class="chapter">${escapeHtml(row.chapter)}</span>
      <span class="status">${status}${score}</span> ${open}
    </li>`;
  });
  const codexCount = state.codexIds.length;
  return `
    <section data-screen="map">
      <h1>Case board</h1>
      <p id="agent">Agent: ${escapeHtml(state.playerId ?? '')}</p>
      ${dialoguePanel(state, false)}
      <ul id="levels">${rows.join('')}</ul>
      ${button('open-codex', `Codex (${codexCount})`)}
    </section>`;
}

function renderBriefing(state: GameState): string {
  const active = state.active!;
  return `
    <section data-screen="briefing">
      <h1>Briefing: ${escapeHtml(active.level_id)}</h1>
      <p id="story-intro">${escapeHtml(active.story_intro)}</p>
      <p id="intro-text">${escapeHtml(active.intro_text)}</p>
      ${button('begin', 'Begin decryption')}
    </section>`;
}

function renderChallenge(state: GameState): string {
  const active = state.active!;
  const challenge = active.challenge;
  const display: string[] = [];
  for (const [key, value] of Object.entries(challenge)) {
    display.push(
      `<div class="challenge-field"><span>${escapeHtml(key)}</span>` +
        ` <code>${escapeHtml(JSON.stringify(value))}</code></div>`,
    );
  }
  return display.join('');
}

function renderAnswerArea(state: GameState, dialShift: number, diagnostics: Diagnostic[]): string {
  const active = state.active!;
  if (active.kind === 'CAESAR') {
    return `
      <div id="dial" class="dial">
        <p>Dial the shift with the arrow keys.</p>
        ${button('dial-left', '◀')}
        <span id="dial-shift">${dialShift}</span>
        ${button('dial-right', '▶')}
      </div>
      <pre id="preview">${escapeHtml(state.draft)}</pre>`;
  }
  if (active.answer_form === 'script') {
    const marks = diagnostics.map(
      (d) =>
        `<li class="diagnostic" data-position="${d.position}">` +
        `${escapeHtml(d.kind)} at ${d.position}: ${escapeHtml(d.message)}</li>`,
    );
    return `
      <textarea id="script-input" rows="3" spellcheck="false">${escapeHtml(state.draft)}</textarea>
      <ul id="diagnostics">${marks.join('')}</ul>`;
  }
  return `<input id="answer-input" value="${escapeHtml(state.draft)}" autocomplete="off">`;
}

function renderPuzzle(state: GameState, dialShift: number, diagnostics: Diagnostic[], retry: boolean): string {
  const active = state.active!;
  const feedback = state.lastFeedback;
  const feedbackHtml = feedback
    ? `<p id="feedback" data-direction="${feedback.direction}">${escapeHtml(feedback.message)}</p>`
    : '<p id="feedback" hidden></p>';
  return `
    <section data-screen="puzzle">
      <h1>${escapeHtml(active.level_id)} — ${escapeHtml(active.kind)}</h1>
      <div id="challenge">${renderChallenge(state)}</div>
      ${renderAnswerArea(state, dialShift, diagnostics)}
      ${feedbackHtml}
      ${dialoguePanel(state, retry)}
      <p id="attempts">attempts: ${state.attempts}</p>
      ${button('submit', 'Transmit answer')}
      ${button('hint', 'Ask Vane')}
      ${button('back-to-map', 'Case board')}
    </section>`;
}

function renderSuccess(state: GameState): string {
  const success = state.success!;
  const badge =
    success.codexUpdates.length > 0
      ? `<p id="codex-badge" class="badge">Codex updated: +${success.codexUpdates.length}` +
        ` (${success.codexUpdates.map(escapeHtml).join(', ')})</p>`
      : '';
  return `
    <section data-screen="success">
      <h1 id="success-message">${escapeHtml(success.message)}</h1>
      <p id="score">score: ${success.score}</p>
      <p id="story-outro">${escapeHtml(success.storyOutro)}</p>
      ${badge}
      ${button('continue', success.nextLevel ? 'Next assignment' : 'Back to the board')}
    </section>`;
}

function renderCodex(state: GameState): string {
  const entries = state.codexEntries.map(
    (entry) => `
      <article class="codex-entry" data-concept="${escapeHtml(entry.concept_id)}">
        <h2>${escapeHtml(entry.title)}</h2>
        <p>${escapeHtml(entry.body)}</p>
        <footer>unlocked by ${escapeHtml(entry.unlocked_by)}</footer>
      </article>`,
  );
  return `
    <section data-screen="codex">
      <h1>Codex</h1>
      <div id="codex-entries">${entries.join('')}</div>
      ${button('back-to-map', 'Case board')}
    </section>`;
}

export function render(
  root: HTMLElement,
  state: GameState,
  dialShift: number,
  diagnostics: Diagnostic[],
  retry: boolean,
): void {
  switch (state.screen) {
    case 'login':
      root.innerHTML = renderLogin();
      break;
    case 'map':
      root.innerHTML = renderMap(state);
      break;
    case 'briefing':
      root.innerHTML = renderBriefing(state);
      break;
    case 'puzzle':
      root.innerHTML = renderPuzzle(state, dialShift, diagnostics, retry);
      break;
    case 'success':
      root.innerHTML = renderSuccess(state);
      break;
    case 'codex':
      root.innerHTML = renderCodex(state);
      break;
  }
}
