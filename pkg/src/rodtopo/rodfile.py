"""Reader for rod-structure files.

Plain format (whitespace-insensitive, ``#`` starts a comment)::

    rods: (0,1) (-1,0) (1,-1) (0,1)

A document whose first non-blank character is ``{`` is read as JSON of the
form ``{"rods": [[0, 1], [-1, 0], ...]}``; any extra keys are ignored, so a
JSON report written by this package can be read back.
"""
from __future__ import annotations

import json


class RodFileError(ValueError):
    pass


class EmptyFile(RodFileError):
    def __init__(self):
        super().__init__("no rod structure found (empty file)")


class RodSyntaxError(RodFileError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        msg = f"{line}:{col}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def location(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def skip(self) -> None:
        text, n = self.text, len(self.text)
        while self.pos < n:
            ch = text[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == "#":
                nl = text.find("\n", self.pos)
                self.pos = n if nl < 0 else nl
            else:
                break

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, at: int, expected: str):
        line, col = self.location(at)
        self.pos = at
        self.skip()
        found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
        raise RodSyntaxError(line, col, expected, found)

    def literal(self, token: str) -> None:
        start = self.pos
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.fail(start, repr(token)[1:-1] if len(token) == 1 else token)
        self.pos += len(token)

    def integer(self) -> int:
        start = self.pos
        self.skip()
        j = self.pos
        if j < len(self.text) and self.text[j] in "+-":
            j += 1
        k = j
        while k < len(self.text) and self.text[k].isdigit():
            k += 1
        if k == j:
            self.fail(start, "integer")
        value = int(self.text[self.pos:k])
        self.pos = k
        return value


def _parse_plain(text: str) -> list[tuple[int, int]]:
    sc = _Scanner(text)
    if sc.peek() == "":
        raise EmptyFile()
    sc.literal("rods")
    sc.literal(":")
    pairs = []
    while True:
        if pairs and sc.peek() != "(":
            break
        sc.literal("(")
        a = sc.integer()
        sc.literal(",")
        b = sc.integer()
        sc.literal(")")
        pairs.append((a, b))
    if sc.peek() != "":
        sc.fail(sc.pos, "( or end of input")
    return pairs


def _parse_json(text: str) -> list[tuple[int, int]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RodSyntaxError(exc.lineno, exc.colno, "valid JSON", exc.msg) from None
    if not isinstance(doc, dict) or "rods" not in doc:
        raise RodSyntaxError(1, 1, 'an object with a "rods" key')
    rods = doc["rods"]
    if not isinstance(rods, list) or not rods:
        raise RodSyntaxError(1, 1, '"rods" to be a non-empty list of pairs')
    pairs = []
    for item in rods:
        ok = (
            isinstance(item, list)
            and len(item) == 2
            and all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        )
        if not ok:
            raise RodSyntaxError(1, 1, "an integer pair", json.dumps(item))
        pairs.append((item[0], item[1]))
    return pairs


def parse_rod_file(text: str) -> list[tuple[int, int]]:
    """Parse rod-file text into integer pairs; no validation of determinants."""
    stripped = text.lstrip()
    if not stripped:
        raise EmptyFile()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_plain(text)


def format_rod_file(pairs) -> str:
    return "rods: " + " ".join(f"({a},{b})" for a, b in pairs) + "\n"
