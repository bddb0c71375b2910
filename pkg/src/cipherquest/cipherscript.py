"""CipherScript: the tiny pipeline language students write in later levels.

Grammar (whitespace-insensitive)::

    program := stage ("|" stage)*
    stage   := name | name "(" args ")"
    args    := literal ("," literal)*
    literal := integer | hex-literal | string-literal

Hex literals are byte strings (``0x`` followed by an even number of hex
digits). String literals are double-quoted. A program is a single linear
pipeline applied to a byte string, stage by stage, left to right:

    shift(n)         Caesar-rotate uppercase text by n
    sub("...26...")  apply a substitution table to uppercase text
    rev              reverse the bytes
    xor(0x..)        XOR with the key bytes, repeated to length
    lfsr(0x..)       XOR with the LFSR keystream from a 1-byte seed
    feistel_dec(0x..) CBC-decrypt; input = 2-byte IV followed by ciphertext

Deliberately not a general-purpose language: no variables, branches, or
loops, so student programs are safe to run and deterministic to grade.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .crypto import (
    FeistelKey,
    LfsrConfig,
    SubstitutionKey,
    caesar_shift,
    cbc_decrypt,
    lfsr_keystream,
    stream_xor,
    substitution_apply,
)

Literal = Union[int, bytes, str]

PIPE, LPAREN, RPAREN, COMMA = "pipe", "lparen", "rparen", "comma"
IDENT, INT, HEX, STRING = "identifier", "integer", "hex-literal", "string-literal"


class ScriptError(Exception):
    """Any CipherScript failure; ``kind`` and ``position``/``stage_index`` drive UI coaching."""

    def __init__(
        self,
        kind: str,
        message: str,
        position: Optional[int] = None,
        stage_index: Optional[int] = None,
    ):
        super().__init__(message)
        self.kind = kind  # lex | parse | unknown-stage | arity | runtime
        self.message = message
        self.position = position
        self.stage_index = stage_index


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    position: int


@dataclass(frozen=True)
class Stage:
    name: str
    args: tuple[Literal, ...] = ()


@dataclass(frozen=True)
class ScriptProgram:
    stages: tuple[Stage, ...]


@dataclass(frozen=True)
class StageDef:
    """Registry entry: expected argument kinds plus a value check."""

    arg_kinds: tuple[str, ...]
    describe: str


def _check_sub_table(value: str) -> Optional[str]:
    try:
        SubstitutionKey(value)
    except ValueError as exc:
        return str(exc)
    return None


def _check_lfsr_seed(value: bytes) -> Optional[str]:
    if len(value) != 1:
        return "lfsr seed must be exactly one byte"
    if value[0] == 0:
        return "lfsr seed must be nonzero"
    return None


def _check_xor_key(value: bytes) -> Optional[str]:
    if len(value) == 0:
        return "xor key must have at least one byte"
    return None


def _check_feistel_key(value: bytes) -> Optional[str]:
    if len(value) != 4:
        return "feistel_dec key must be exactly four bytes (32 bits)"
    return None


REGISTRY: dict[str, StageDef] = {
    "shift": StageDef((INT,), "shift(<integer>)"),
    "sub": StageDef((STRING,), 'sub("<26-letter table>")'),
    "rev": StageDef((), "rev"),
    "xor": StageDef((HEX,), "xor(0x<bytes>)"),
    "lfsr": StageDef((HEX,), "lfsr(0x<1 byte>)"),
    "feistel_dec": StageDef((HEX,), "feistel_dec(0x<4 bytes>)"),
}

_ARG_CHECKS = {
    "sub": _check_sub_table,
    "lfsr": _check_lfsr_seed,
    "xor": _check_xor_key,
    "feistel_dec": _check_feistel_key,
}

_PUNCT = {"|": PIPE, "(": LPAREN, ")": RPAREN, ",": COMMA}


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, i))
            i += 1
            continue
        if ch == '"':
            j = source.find('"', i + 1)
            if j == -1:
                raise ScriptError("lex", "unterminated string literal", position=i)
            tokens.append(Token(STRING, source[i : j + 1], i))
            i = j + 1
            continue
        if source.startswith(("0x", "0X"), i):
            j = i + 2
            while j < n and source[j] in "0123456789abcdefABCDEF":
                j += 1
            digits = source[i + 2 : j]
            if not digits:
                raise ScriptError("lex", "hex literal needs digits after 0x", position=i)
            if len(digits) % 2 != 0:
                raise ScriptError(
                    "lex", "hex literal needs an even number of digits", position=i
                )
            tokens.append(Token(HEX, source[i:j], i))
            i = j
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and source[i + 1].isdigit()):
            j = i + 1
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token(INT, source[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(Token(IDENT, source[i:j], i))
            i = j
            continue
        raise ScriptError("lex", f"illegal character {ch!r}", position=i)
    return tokens


def _literal_value(token: Token) -> Literal:
    if token.kind == INT:
        return int(token.lexeme)
    if token.kind == HEX:
        return bytes.fromhex(token.lexeme[2:])
    return token.lexeme[1:-1]


class _Parser:
    def __init__(self, tokens: list[Token], source_len: int):
        self.tokens = tokens
        self.pos = 0
        self.source_len = source_len

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> Optional[Token]:
        token = self._peek()
        if token is not None:
            self.pos += 1
        return token

    def _here(self) -> int:
        token = self._peek()
        return token.position if token is not None else self.source_len

    def parse(self) -> ScriptProgram:
        stages = [self._stage()]
        while True:
            token = self._peek()
            if token is None:
                break
            if token.kind != PIPE:
                raise ScriptError(
                    "parse", f"expected '|' between stages, found {token.lexeme!r}",
                    position=token.position,
                )
            self._next()
            stages.append(self._stage())
        return ScriptProgram(tuple(stages))

    def _stage(self) -> Stage:
        token = self._next()
        if token is None:
            raise ScriptError("parse", "expected a stage name", position=self.source_len)
        if token.kind != IDENT:
            raise ScriptError(
                "parse", f"expected a stage name, found {token.lexeme!r}",
                position=token.position,
            )
        name = token.lexeme
        definition = REGISTRY.get(name)
        if definition is None:
            known = ", ".join(sorted(REGISTRY))
            raise ScriptError(
                "unknown-stage", f"unknown stage {name!r} (known: {known})",
                position=token.position,
            )
        args: list[tuple[Token, Literal]] = []
        close_pos = token.position + len(name)
        if self._peek() is not None and self._peek().kind == LPAREN:
            self._next()
            if self._peek() is not None and self._peek().kind == RPAREN:
                close_pos = self._next().position
            else:
                while True:
                    arg = self._next()
                    if arg is None:
                        raise ScriptError(
                            "parse", "unclosed argument list", position=self.source_len
                        )
                    if arg.kind not in (INT, HEX, STRING):
                        raise ScriptError(
                            "parse",
                            f"expected a literal argument, found {arg.lexeme!r}",
                            position=arg.position,
                        )
                    args.append((arg, _literal_value(arg)))
                    sep = self._next()
                    if sep is None:
                        raise ScriptError(
                            "parse", "unclosed argument list", position=self.source_len
                        )
                    if sep.kind == RPAREN:
                        close_pos = sep.position
                        break
                    if sep.kind != COMMA:
                        raise ScriptError(
                            "parse",
                            f"expected ',' or ')', found {sep.lexeme!r}",
                            position=sep.position,
                        )
        return self._validated(name, definition, args, close_pos)

    def _validated(
        self,
        name: str,
        definition: StageDef,
        args: list[tuple[Token, Literal]],
        close_pos: int,
    ) -> Stage:
        expected = definition.arg_kinds
        if len(args) != len(expected):
            raise ScriptError(
                "arity",
                f"{name} takes {len(expected)} argument(s), got {len(args)}"
                f" (usage: {definition.describe})",
                position=close_pos,
            )
        for (token, _), kind in zip(args, expected):
            if token.kind != kind:
                raise ScriptError(
                    "arity",
                    f"{name} expects a {kind} argument (usage: {definition.describe})",
                    position=token.position,
                )
        check = _ARG_CHECKS.get(name)
        if check is not None and args:
            problem = check(args[0][1])
            if problem:
                raise ScriptError("arity", problem, position=args[0][0].position)
        return Stage(name, tuple(value for _, value in args))


def parse(source: str) -> ScriptProgram:
    tokens = tokenize(source)
    if not tokens:
        raise ScriptError("parse", "empty program", position=0)
    return _Parser(tokens, len(source)).parse()


def _format_literal(value: Literal) -> str:
    if isinstance(value, bool):  # guard: bools are ints
        raise TypeError("boolean literal has no CipherScript form")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, bytes):
        return "0x" + value.hex().upper()
    return f'"{value}"'


def format_program(program: ScriptProgram) -> str:
    """Canonical source text; parse(format_program(p)) is structurally p."""
    parts = []
    for stage in program.stages:
        if stage.args:
            parts.append(f"{stage.name}({', '.join(_format_literal(a) for a in stage.args)})")
        else:
            parts.append(stage.name)
    return " | ".join(parts)


def _as_text(data: bytes, stage_index: int, stage_name: str) -> str:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise ScriptError(
            "runtime",
            f"{stage_name} needs uppercase text input, got non-ASCII bytes",
            stage_index=stage_index,
        ) from None
    return text


def _run_stage(stage: Stage, data: bytes, index: int) -> bytes:
    name = stage.name
    if name == "rev":
        return data[::-1]
    if name == "shift":
        text = _as_text(data, index, name)
        return caesar_shift(text, stage.args[0]).encode("ascii")
    if name == "sub":
        text = _as_text(data, index, name)
        return substitution_apply(text, SubstitutionKey(stage.args[0])).encode("ascii")
    if name == "xor":
        key = stage.args[0]
        repeated = (key * (len(data) // len(key) + 1))[: len(data)]
        return stream_xor(data, repeated)
    if name == "lfsr":
        cfg = LfsrConfig(seed=stage.args[0][0])
        return stream_xor(data, lfsr_keystream(cfg, len(data)))
    if name == "feistel_dec":
        if len(data) < 2:
            raise ScriptError(
                "runtime", "feistel_dec input must start with a 2-byte IV",
                stage_index=index,
            )
        iv = int.from_bytes(data[:2], "big")
        key = FeistelKey(int.from_bytes(stage.args[0], "big"))
        return cbc_decrypt(data[2:], key, iv)
    raise ScriptError("runtime", f"stage {name!r} has no evaluator", stage_index=index)


def evaluate(program: ScriptProgram, data: bytes) -> bytes:
    """Apply the stages left to right; runtime failures name the stage index."""
    for index, stage in enumerate(program.stages):
        try:
            data = _run_stage(stage, data, index)
        except ScriptError:
            raise
        except ValueError as exc:
            raise ScriptError("runtime", str(exc), stage_index=index) from exc
    return data


def run_source(source: str, data: bytes) -> bytes:
    return evaluate(parse(source), data)
