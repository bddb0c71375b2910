/**
 * Full-stack playthrough against the real Python service: a scripted session
 * logs in, opens the first level, works the shift dial with arrow keys, and
 * submits the correct reading. No stubs anywhere; the only script-side smarts
 * is a letter-frequency scorer that picks which dial position reads as
 * English, the same call a human player makes by eye.
 */

import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { App } from '../../src/app.js';
import { caesarApply } from '../../src/shiftDial.js';
import { spawnServer, type LiveServer } from './helpers.js';

const FREQ: Record<string, number> = {
  E: 12.7, T: 9.1, A: 8.2, O: 7.5, I: 7.0, N: 6.7, S: 6.3, H: 6.1, R: 6.0,
  D: 4.3, L: 4.0, C: 2.8, U: 2.8, M: 2.4, W: 2.4, F: 2.2, G: 2.0, Y: 2.0,
  P: 1.9, B: 1.5, V: 1.0, K: 0.8, J: 0.15, X: 0.15, Q: 0.1, Z: 0.07,
};

function englishScore(text: string): number {
  let score = 0;
  for (const ch of text) score += FREQ[ch] ?? 0;
  return score;
}

function press(key: string): void {
  document.dispatchEvent(new KeyboardEvent('keydown', { key, bubbles: true }));
}

function click(id: string): void {
  const el = document.getElementById(id);
  expect(el, `missing #${id}`).not.toBeNull();
  el!.dispatchEvent(new MouseEvent('click', { bubbles: true }));
}

function text(id: string): string {
  return document.getElementById(id)?.textContent ?? '';
}

function screenName(): string | null {
  return document.querySelector('section')?.getAttribute('data-screen') ?? null;
}

async function waitFor(cond: () => boolean, what: string, ms = 10000): Promise<void> {
  const deadline = Date.now() + ms;
  while (Date.now() < deadline) {
    if (cond()) return;
    await new Promise((resolve) => setTimeout(resolve, 10));
  }
  throw new Error(`timed out waiting for ${what}`);
}

describe('level one over live HTTP', () => {
  let server: LiveServer;
  let app: App;

  beforeAll(async () => {
    server = await spawnServer();
    document.body.innerHTML = '<div id="app"></div>';
    app = new App(document.getElementById('app')!, server.baseUrl);
  });

  afterAll(async () => {
    await server.stop();
  });

  it('dials in the shift and reaches the success screen', async () => {
    expect(screenName()).toBe('login');
    const input = document.getElementById('player-id') as HTMLInputElement;
    input.value = 'fielding';
    click('login');
    await waitFor(() => screenName() === 'map', 'case board');

    click('level-level-01');
    await waitFor(() => screenName() === 'briefing', 'briefing');
    press('Enter');
    await waitFor(() => screenName() === 'puzzle', 'puzzle');

    const ciphertext = String(app.state.active!.challenge['ciphertext']);
    expect(text('preview')).toBe(ciphertext); // dial starts at 0
    expect(text('dial-shift')).toBe('0');

    // each arrow press moves the preview; 26 presses visit every rotation
    const seen = new Set<string>();
    for (let i = 0; i < 26; i += 1) {
      seen.add(text('preview'));
      press('ArrowRight');
    }
    expect(seen.size).toBe(26);
    expect(text('dial-shift')).toBe('0');
    expect(text('preview')).toBe(ciphertext);

    press('ArrowLeft');
    expect(text('dial-shift')).toBe('25');
    press('ArrowRight');
    expect(text('dial-shift')).toBe('0');

    // read the dial like a player: the rotation that looks most like English
    let best = 0;
    let bestScore = -1;
    for (let k = 0; k < 26; k += 1) {
      const score = englishScore(caesarApply(ciphertext, -k));
      if (score > bestScore) {
        bestScore = score;
        best = k;
      }
    }
    for (let i = 0; i < best; i += 1) press('ArrowRight');
    expect(text('dial-shift')).toBe(String(best));

    press('Enter');
    await waitFor(() => screenName() === 'success', 'success screen');

    expect(text('success-message').length).toBeGreaterThan(0);
    expect(text('score')).toMatch(/\d/);
    const badge = document.getElementById('codex-badge');
    expect(badge, 'codex badge').not.toBeNull();
    expect(badge!.textContent).toMatch(/\+\d/);
  });

  it('never holds solution material client side', () => {
    const dumped = JSON.stringify(app.state.dump());
    for (const leak of ['"solution"', '"plaintext_pool"', '"private"', '"shift_used"']) {
      expect(dumped).not.toContain(leak);
    }
  });

  it('continue flows into the next briefing', async () => {
    click('continue');
    await waitFor(() => screenName() === 'briefing', 'next briefing');
    expect(app.state.current).toBe('level-02');
  });
});
