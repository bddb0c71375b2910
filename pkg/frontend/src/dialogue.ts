/**
 * Handler Vane speaks for the system. Raw machine codes never reach the
 * player; every failure becomes in-character dialogue. The machine code
 * still rides along in a data attribute for debugging.
 */

import { ApiError, BusyError, NetworkError } from './api.js';

const BY_CODE: Record<string, string> = {
  UNKNOWN_SESSION: 'Vane: Your line went dead. Sign back in and we go again.',
  LEVEL_LOCKED: 'Vane: Not that door yet. Clear the earlier assignments first.',
  UNKNOWN_LEVEL: 'Vane: No such assignment in the case file.',
  NO_ACTIVE_INSTANCE: 'Vane: Open the intercept before you work it.',
  LOCKED_PROFILE: 'Vane: Someone is already on this desk. One agent per file.',
  BAD_ANSWER_FORM: 'Vane: That reading will not transmit.',
  BAD_REQUEST: 'Vane: Garbled request. Try that again, carefully.',
  STORAGE_FAILURE: 'Vane: The archive jammed. Give it a moment and retry.',
};

export interface DialogueLine {
  text: string;
  code: string;
  retry: boolean;
}

export function dialogueFor(error: unknown): DialogueLine {
  if (error instanceof NetworkError) {
    return {
      text: 'Vane: Signal lost. Your work is safe; re-send when the line clears.',
      code: 'NETWORK',
      retry: true,
    };
  }
  if (error instanceof BusyError) {
    return {
      text: 'Vane: One transmission at a time, agent.',
      code: 'BUSY',
      retry: false,
    };
  }
  if (error instanceof ApiError) {
    const line = BY_CODE[error.code];
    if (error.code === 'BAD_ANSWER_FORM') {
      return { text: `${BY_CODE.BAD_ANSWER_FORM} ${error.message}`, code: error.code, retry: false };
    }
    return {
      text: line ?? `Vane: Control reports a problem. ${error.message}`,
      code: error.code,
      retry: false,
    };
  }
  return {
    text: 'Vane: Something went sideways on our end.',
    code: 'CLIENT',
    retry: false,
  };
}
