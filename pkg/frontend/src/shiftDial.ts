/**
 * The Caesar dial: arrow keys pick a candidate shift and the ciphertext
 * preview re-renders locally. The preview applies a public transformation to
 * public ciphertext, so it is safe client-side; grading still happens on the
 * server when the player submits the previewed text.
 *
 * Convention: the dial value is the shift the player believes the sender
 * used, so the preview rotates the ciphertext BACK by that amount. At dial 0
 * the preview is exactly the displayed ciphertext.
 */

const ALPHABET_SIZE = 26;
const A = 'A'.charCodeAt(0);

/** Rotate uppercase letters forward by `shift`; everything else passes through. */
export function caesarApply(text: string, shift: number): string {
  const k = ((shift % ALPHABET_SIZE) + ALPHABET_SIZE) % ALPHABET_SIZE;
  let out = '';
  for (const ch of text) {
    const code = ch.charCodeAt(0);
    if (code >= A && code < A + ALPHABET_SIZE) {
      out += String.fromCharCode(A + ((code - A + k) % ALPHABET_SIZE));
    } else {
      out += ch;
    }
  }
  return out;
}

export class ShiftDial {
  private value = 0;

  constructor(private readonly ciphertext: string) {}

  get shift(): number {
    return this.value;
  }

  /** 26 presses in one direction bring the dial back to where it started. */
  turn(direction: 'left' | 'right'): number {
    const delta = direction === 'right' ? 1 : -1;
    this.value = (this.value + delta + ALPHABET_SIZE) % ALPHABET_SIZE;
    return this.value;
  }

  set(shift: number): number {
    this.value = ((shift % ALPHABET_SIZE) + ALPHABET_SIZE) % ALPHABET_SIZE;
    return this.value;
  }

  /** Candidate plaintext under the current dial position. */
  preview(): string {
    return caesarApply(this.ciphertext, -this.value);
  }
}
