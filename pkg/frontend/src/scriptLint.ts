/**
 * Client-side mirror of the CipherScript grammar, for live editor
 * diagnostics. This is a lint, not an authority: submissions always send the
 * raw text and the server re-parses. The mirror exists so the editor can
 * mark mistakes (with the same positions the server would report) before the
 * student burns a round trip.
 *
 * Grammar:
 *   program := stage ("|" stage)*
 *   stage   := name | name "(" args ")"
 *   args    := literal ("," literal)*
 *   literal := integer | hex-literal | string-literal
 */

export interface Diagnostic {
  kind: 'lex' | 'parse' | 'unknown-stage' | 'arity';
  message: string;
  position: number;
}

type TokenKind =
  | 'pipe'
  | 'lparen'
  | 'rparen'
  | 'comma'
  | 'identifier'
  | 'integer'
  | 'hex-literal'
  | 'string-literal';

interface Token {
  kind: TokenKind;
  lexeme: string;
  position: number;
}

class LintError extends Error {
  constructor(readonly diagnostic: Diagnostic) {
    super(diagnostic.message);
  }
}

function fail(kind: Diagnostic['kind'], message: string, position: number): never {
  throw new LintError({ kind, message, position });
}

const PUNCT: Record<string, TokenKind> = {
  '|': 'pipe',
  '(': 'lparen',
  ')': 'rparen',
  ',': 'comma',
};

const HEX_DIGITS = /[0-9a-fA-F]/;
const LETTER = /\p{L}/u;
const DIGIT = /\p{Nd}/u;
const WORD = /[\p{L}\p{N}_]/u;

function tokenize(source: string): Token[] {
  const tokens: Token[] = [];
  let i = 0;
  const n = source.length;
  while (i < n) {
    const ch = source[i]!;
    if (/\s/.test(ch)) {
      i += 1;
      continue;
    }
    const punct = PUNCT[ch];
    if (punct !== undefined) {
      tokens.push({ kind: punct, lexeme: ch, position: i });
      i += 1;
      continue;
    }
    if (ch === '"') {
      const j = source.indexOf('"', i + 1);
      if (j === -1) fail('lex', 'unterminated string literal', i);
      tokens.push({ kind: 'string-literal', lexeme: source.slice(i, j + 1), position: i });
      i = j + 1;
      continue;
    }
    if (source.startsWith('0x', i) || source.startsWith('0X', i)) {
      let j = i + 2;
      while (j < n && HEX_DIGITS.test(source[j]!)) j += 1;
      const digits = source.slice(i + 2, j);
      if (digits.length === 0) fail('lex', 'hex literal needs digits after 0x', i);
      if (digits.length % 2 !== 0) {
        fail('lex', 'hex literal needs an even number of digits', i);
      }
      tokens.push({ kind: 'hex-literal', lexeme: source.slice(i, j), position: i });
      i = j;
      continue;
    }
    if (DIGIT.test(ch) || (ch === '-' && i + 1 < n && DIGIT.test(source[i + 1]!))) {
      let j = i + 1;
      while (j < n && DIGIT.test(source[j]!)) j += 1;
      tokens.push({ kind: 'integer', lexeme: source.slice(i, j), position: i });
      i = j;
      continue;
    }
    if (LETTER.test(ch) || ch === '_') {
      let j = i;
      while (j < n && (WORD.test(source[j]!) || source[j] === '_')) j += 1;
      tokens.push({ kind: 'identifier', lexeme: source.slice(i, j), position: i });
      i = j;
      continue;
    }
    fail('lex', `illegal character ${JSON.stringify(ch)}`, i);
  }
  return tokens;
}

interface StageDef {
  argKinds: TokenKind[];
  describe: string;
}

const REGISTRY: Record<string, StageDef> = {
  shift: { argKinds: ['integer'], describe: 'shift(<integer>)' },
  sub: { argKinds: ['string-literal'], describe: 'sub("<26-letter table>")' },
  rev: { argKinds: [], describe: 'rev' },
  xor: { argKinds: ['hex-literal'], describe: 'xor(0x<bytes>)' },
  lfsr: { argKinds: ['hex-literal'], describe: 'lfsr(0x<1 byte>)' },
  feistel_dec: { argKinds: ['hex-literal'], describe: 'feistel_dec(0x<4 bytes>)' },
};

const ALPHABET = 'ABCDEFGHIJKLMNOPQRSTUVWXYZ';

function checkArgValue(name: string, token: Token): string | null {
  if (name === 'sub') {
    const table = token.lexeme.slice(1, -1);
    const sorted = [...table].sort().join('');
    if (table.length !== 26 || sorted !== ALPHABET) {
      return 'substitution key must be a permutation of A-Z';
    }
    return null;
  }
  const byteLength = (token.lexeme.length - 2) / 2;
  if (name === 'lfsr') {
    if (byteLength !== 1) return 'lfsr seed must be exactly one byte';
    if (/^0x0{2}$/i.test(token.lexeme)) return 'lfsr seed must be nonzero';
    return null;
  }
  if (name === 'xor') {
    return byteLength === 0 ? 'xor key must have at least one byte' : null;
  }
  if (name === 'feistel_dec') {
    return byteLength === 4 ? null : 'feistel_dec key must be exactly four bytes (32 bits)';
  }
  return null;
}

class Parser {
  private pos = 0;

  constructor(
    private readonly tokens: Token[],
    private readonly sourceLength: number,
  ) {}

  private peek(): Token | null {
    return this.pos < this.tokens.length ? this.tokens[this.pos]! : null;
  }

  private next(): Token | null {
    const token = this.peek();
    if (token !== null) this.pos += 1;
    return token;
  }

  parseProgram(): void {
    this.stage();
    for (;;) {
      const token = this.peek();
      if (token === null) break;
      if (token.kind !== 'pipe') {
        fail(
          'parse',
          `expected '|' between stages, found ${JSON.stringify(token.lexeme)}`,
          token.position,
        );
      }
      this.next();
      this.stage();
    }
  }

  private stage(): void {
    const token = this.next();
    if (token === null) fail('parse', 'expected a stage name', this.sourceLength);
    if (token.kind !== 'identifier') {
      fail(
        'parse',
        `expected a stage name, found ${JSON.stringify(token.lexeme)}`,
        token.position,
      );
    }
    const name = token.lexeme;
    const definition = REGISTRY[name];
    if (definition === undefined) {
      const known = Object.keys(REGISTRY).sort().join(', ');
      fail('unknown-stage', `unknown stage ${JSON.stringify(name)} (known: ${known})`, token.position);
    }
    const args: Token[] = [];
    let closePos = token.position + name.length;
    if (this.peek()?.kind === 'lparen') {
      this.next();
      if (this.peek()?.kind === 'rparen') {
        closePos = this.next()!.position;
      } else {
        for (;;) {
          const arg = this.next();
          if (arg === null) fail('parse', 'unclosed argument list', this.sourceLength);
          if (arg.kind !== 'integer' && arg.kind !== 'hex-literal' && arg.kind !== 'string-literal') {
            fail(
              'parse',
              `expected a literal argument, found ${JSON.stringify(arg.lexeme)}`,
              arg.position,
            );
          }
          args.push(arg);
          const sep = this.next();
          if (sep === null) fail('parse', 'unclosed argument list', this.sourceLength);
          if (sep.kind === 'rparen') {
            closePos = sep.position;
            break;
          }
          if (sep.kind !== 'comma') {
            fail('parse', `expected ',' or ')', found ${JSON.stringify(sep.lexeme)}`, sep.position);
          }
        }
      }
    }
    this.checkStage(name, definition, args, closePos);
  }

  private checkStage(name: string, definition: StageDef, args: Token[], closePos: number): void {
    const expected = definition.argKinds;
    if (args.length !== expected.length) {
      fail(
        'arity',
        `${name} takes ${expected.length} argument(s), got ${args.length}` +
          ` (usage: ${definition.describe})`,
        closePos,
      );
    }
    for (let i = 0; i < args.length; i += 1) {
      if (args[i]!.kind !== expected[i]) {
        fail(
          'arity',
          `${name} expects a ${expected[i]} argument (usage: ${definition.describe})`,
          args[i]!.position,
        );
      }
    }
    if (args.length > 0) {
      const problem = checkArgValue(name, args[0]!);
      if (problem !== null) fail('arity', problem, args[0]!.position);
    }
  }
}

/**
 * Lint one program. Empty array means the server's parser would accept it;
 * otherwise the first error, with the position the server would report.
 */
export function lint(source: string): Diagnostic[] {
  try {
    const tokens = tokenize(source);
    if (tokens.length === 0) fail('parse', 'empty program', 0);
    new Parser(tokens, source.length).parseProgram();
    return [];
  } catch (error) {
    if (error instanceof LintError) return [error.diagnostic];
    throw error;
  }
}
