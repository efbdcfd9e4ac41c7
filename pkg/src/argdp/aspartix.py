"""Reading and writing the ASPARTIX fact format.

An input is a sequence of facts ``arg(<id>).`` and ``att(<id>,<id>).`` in
any order; whitespace between tokens is insignificant and ``%`` starts a
comment running to the end of the line.  Identifiers begin with a letter
or underscore and continue with letters, digits or underscores.  Attack
endpoints must be declared by an ``arg`` fact somewhere in the file.
"""

from __future__ import annotations

from dataclasses import dataclass

from .af import ArgumentationFramework

_ID_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_ID_CONT = _ID_START | set("0123456789")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    kind: str  # "syntax" or "semantic"

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.kind} error: {self.message}"


class AspartixError(Exception):
    """Parse failure, carrying a positioned diagnostic."""

    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def _advance(self) -> None:
        if self.text[self.pos] == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        self.pos += 1

    def skip_trivia(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch.isspace():
                self._advance()
            elif ch == "%":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def fail(self, message: str) -> "AspartixError":
        return AspartixError(ParseDiagnostic(self.line, self.column, message, "syntax"))

    def identifier(self) -> tuple[str, int, int]:
        line, column = self.line, self.column
        if self.at_end() or self.text[self.pos] not in _ID_START:
            found = "end of input" if self.at_end() else repr(self.text[self.pos])
            raise self.fail(f"expected identifier, found {found}")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _ID_CONT:
            self._advance()
        return self.text[start : self.pos], line, column

    def expect(self, token: str) -> None:
        self.skip_trivia()
        if self.at_end() or self.text[self.pos] != token:
            found = "end of input" if self.at_end() else repr(self.text[self.pos])
            raise self.fail(f"expected {token!r}, found {found}")
        self._advance()


def parse_aspartix(text: str) -> ArgumentationFramework:
    """Parse ``arg``/``att`` facts into a framework.

    Facts may appear in any order, duplicates are idempotent.  Raises
    AspartixError with a syntax diagnostic on malformed input, or with a
    semantic diagnostic when an attack endpoint is never declared.
    """
    scanner = _Scanner(text)
    declared: set[str] = set()
    attacks: list[tuple[str, str]] = []
    endpoints: list[tuple[str, int, int]] = []

    while True:
        scanner.skip_trivia()
        if scanner.at_end():
            break
        head, line, column = scanner.identifier()
        if head == "arg":
            scanner.expect("(")
            scanner.skip_trivia()
            name, _, _ = scanner.identifier()
            scanner.expect(")")
            scanner.expect(".")
            declared.add(name)
        elif head == "att":
            scanner.expect("(")
            scanner.skip_trivia()
            src = scanner.identifier()
            scanner.expect(",")
            scanner.skip_trivia()
            dst = scanner.identifier()
            scanner.expect(")")
            scanner.expect(".")
            attacks.append((src[0], dst[0]))
            endpoints.append(src)
            endpoints.append(dst)
        else:
            raise AspartixError(
                ParseDiagnostic(line, column, f"unknown fact {head!r}", "syntax")
            )

    for name, line, column in endpoints:
        if name not in declared:
            raise AspartixError(
                ParseDiagnostic(line, column, f"undeclared argument {name!r}", "semantic")
            )
    return ArgumentationFramework.of(declared, attacks)


def serialize_aspartix(af: ArgumentationFramework) -> str:
    """Emit arg facts then att facts, each lexicographically sorted, one per
    line.  parse_aspartix inverts this exactly."""
    lines = [f"arg({a})." for a in af.arguments]
    lines += [f"att({src},{dst})." for src, dst in sorted(af.attacks)]
    return "".join(line + "\n" for line in lines)
