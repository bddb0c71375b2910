/**
 * Agreement check between the editor lint and the server parser: fifty
 * CipherScript programs are linted locally and submitted to a live service,
 * and every verdict must line up. Well-formed programs are accepted as
 * attempts (status 200, right or wrong); malformed ones come back 422 with a
 * position that must match the lint diagnostic exactly. The server is the
 * oracle here, so the test freezes no positions of its own.
 */

import { join } from 'node:path';

import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { lint } from '../../src/scriptLint.js';
import { spawnServer, type LiveServer } from './helpers.js';

// 25 well-formed programs; most decrypt to nonsense, which is still a valid attempt
const WELL_FORMED: string[] = [
  'rev',
  'rev()',
  'shift(3)',
  'shift(-3)',
  'shift(25) | rev',
  'xor(0xFF)',
  'xor(0x00)',
  'xor(0xDEADBEEF)',
  'lfsr(0x5A)',
  'lfsr(0x01)',
  'feistel_dec(0x00112233)',
  'sub("QWERTYUIOPASDFGHJKLZXCVBNM")',
  'sub("ABCDEFGHIJKLMNOPQRSTUVWXYZ")',
  'shift(1)|shift(2)|shift(3)',
  'rev | rev',
  'shift(13) | shift(13)',
  'xor(0xAB) | xor(0xAB)',
  'lfsr(0xFF) | rev',
  'shift(0)',
  'shift(100)',
  'shift(3) | sub("ZYXWVUTSRQPONMLKJIHGFEDCBA")',
  'feistel_dec(0xFFFFFFFF) | rev',
  'xor(0x0102030405)',
  'rev|shift(7)',
  ' shift( 9 ) | rev ',
];

// 25 malformed programs covering every diagnostic family
const MALFORMED: string[] = [
  '',
  '   ',
  'shift(',
  'shift(3',
  'shift(3) |',
  'shift()',
  'rev(1)',
  'xor(0xF)',
  'xor(0x)',
  'xor()',
  'sub("ABC")',
  'sub("ABC',
  'sub(QWERTY)',
  'lfsr(0x0102)',
  'lfsr(0x00)',
  'feistel_dec(0x0011)',
  'feistel_dec(3)',
  'frobnicate',
  'feistel_enc(0x00112233)',
  'shift(3) rev',
  '| shift(3)',
  'shíft(3)',
  'shift(3,4)',
  'shift("3")',
  '0xFF',
];

// vitest runs with the frontend directory as cwd
const FIXTURE = join(process.cwd(), 'test', 'e2e', 'fixtures', 'mini-campaign.json');

describe('lint agrees with the server on the 50-program corpus', () => {
  let server: LiveServer;
  let session = '';

  async function api(method: string, path: string, body?: unknown): Promise<Response> {
    const headers: Record<string, string> = { 'X-Session': session };
    if (body !== undefined) headers['Content-Type'] = 'application/json';
    return fetch(`${server.baseUrl}${path}`, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
  }

  beforeAll(async () => {
    server = await spawnServer({ campaign: FIXTURE });
    const opened = await fetch(`${server.baseUrl}/api/session`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ player_id: 'corpus' }),
    });
    expect(opened.status).toBe(200);
    session = ((await opened.json()) as { session_id: string }).session_id;
    const started = await api('POST', '/api/level/level-06/start');
    expect(started.status).toBe(200);
    const form = ((await started.json()) as { answer_form: string }).answer_form;
    expect(form).toBe('script');
  });

  afterAll(async () => {
    await server.stop();
  });

  it('matches verdict and position on all 50 programs', async () => {
    const disagreements: string[] = [];
    for (const program of [...WELL_FORMED, ...MALFORMED]) {
      const diagnostics = lint(program);
      const res = await api('POST', '/api/attempt', { answer: program });
      const payload = (await res.json()) as Record<string, unknown>;
      const label = JSON.stringify(program);

      if (res.status === 422) {
        if (diagnostics.length !== 1) {
          disagreements.push(`${label}: server rejected but lint saw no error`);
          continue;
        }
        if (payload['code'] !== 'BAD_ANSWER_FORM') {
          disagreements.push(`${label}: unexpected code ${String(payload['code'])}`);
          continue;
        }
        const message = String(payload['message']);
        const match = message.match(/\(position (\d+)\)/);
        if (match === null) {
          disagreements.push(`${label}: no position in "${message}"`);
        } else if (Number(match[1]) !== diagnostics[0]!.position) {
          disagreements.push(
            `${label}: lint at ${diagnostics[0]!.position}, server at ${match[1]} ("${message}")`,
          );
        }
      } else if (res.status === 200) {
        if (diagnostics.length !== 0) {
          disagreements.push(
            `${label}: lint flagged ${diagnostics[0]!.kind} at ${diagnostics[0]!.position} but server accepted`,
          );
        }
        if (payload['verdict'] === 'correct') {
          // accidental solve; rearm the level so later programs still count
          const restarted = await api('POST', '/api/level/level-06/start');
          expect(restarted.status).toBe(200);
        }
      } else {
        disagreements.push(`${label}: unexpected status ${res.status}`);
      }
    }
    expect(disagreements, disagreements.join('\n')).toEqual([]);
  }, 120000);

  it('covers both sides of the grammar', () => {
    expect(WELL_FORMED.length).toBe(25);
    expect(MALFORMED.length).toBe(25);
    expect(WELL_FORMED.every((p) => lint(p).length === 0)).toBe(true);
    expect(MALFORMED.every((p) => lint(p).length === 1)).toBe(true);
  });
});
