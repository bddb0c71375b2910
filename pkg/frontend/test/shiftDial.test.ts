import { describe, expect, it } from 'vitest';

import { ShiftDial, caesarApply } from '../src/shiftDial.js';

const CIPHERTEXT = 'WKH GURS LV VHW IRU PLGQLJKW';

describe('caesarApply', () => {
  it('rotates uppercase letters and passes spaces through', () => {
    expect(caesarApply('ATTACK AT DAWN', 3)).toBe('DWWDFN DW GDZQ');
  });

  it('handles negative shifts as the inverse rotation', () => {
    expect(caesarApply('DWWDFN DW GDZQ', -3)).toBe('ATTACK AT DAWN');
  });

  it('is periodic in the shift', () => {
    for (const shift of [0, 1, 13, 25, 26, 52, -26]) {
      expect(caesarApply(CIPHERTEXT, shift)).toBe(caesarApply(CIPHERTEXT, shift + 26));
    }
  });
});

describe('ShiftDial', () => {
  it('previews the raw ciphertext at shift 0', () => {
    const dial = new ShiftDial(CIPHERTEXT);
    expect(dial.shift).toBe(0);
    expect(dial.preview()).toBe(CIPHERTEXT);
  });

  it('wraps left from 0 to 25', () => {
    const dial = new ShiftDial(CIPHERTEXT);
    expect(dial.turn('left')).toBe(25);
    expect(dial.preview()).toBe(caesarApply(CIPHERTEXT, -25));
  });

  it('returns to the start after 26 presses right', () => {
    const dial = new ShiftDial(CIPHERTEXT);
    const seen: number[] = [];
    for (let i = 0; i < 26; i += 1) seen.push(dial.turn('right'));
    expect(dial.shift).toBe(0);
    expect(dial.preview()).toBe(CIPHERTEXT);
    expect(new Set(seen).size).toBe(26);
  });

  it('returns to the start after 26 presses left', () => {
    const dial = new ShiftDial(CIPHERTEXT);
    for (let i = 0; i < 26; i += 1) dial.turn('left');
    expect(dial.shift).toBe(0);
  });

  it('dialing the true shift recovers the plaintext', () => {
    const dial = new ShiftDial(CIPHERTEXT);
    for (let i = 0; i < 3; i += 1) dial.turn('right');
    expect(dial.preview()).toBe('THE DROP IS SET FOR MIDNIGHT');
  });

  it('left then right cancels out', () => {
    const dial = new ShiftDial(CIPHERTEXT);
    dial.turn('left');
    dial.turn('right');
    expect(dial.preview()).toBe(CIPHERTEXT);
  });
});
