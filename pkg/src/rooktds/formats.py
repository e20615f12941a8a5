"""Text encodings of BitMatrix.

grid:  "n m" header, then n lines of m '0'/'1' characters, each ending in '\\n'.
pbm:   plain portable bitmap (P1), width m and height n.
json:  {"n": n, "m": m, "rows": ["0011", ...]}.
"""

from __future__ import annotations

import json

from .matrix import BitMatrix

FORMATS = ("grid", "pbm", "json")


class MatrixParseError(ValueError):
    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


def parse_matrix_text(data: str | bytes) -> BitMatrix:
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MatrixParseError("input is not ASCII", 1) from exc
    if not data:
        raise MatrixParseError("empty input", 1)

    lines = data.split("\n")
    if lines[-1] == "":
        lines.pop()

    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise MatrixParseError(f"header must be 'n m' with two positive integers, got {lines[0]!r}", 1)
    n, m = int(header[0]), int(header[1])
    if n < 1 or m < 1:
        raise MatrixParseError(f"dimensions must be positive, got {n}x{m}", 1)

    body = lines[1:]
    cells: list[int] = []
    for r, line in enumerate(body[:n]):
        lineno = r + 2
        for c, ch in enumerate(line):
            if ch not in "01":
                raise MatrixParseError(f"illegal character {ch!r}", lineno, c + 1)
        if len(line) != m:
            raise MatrixParseError(f"expected {m} cells, got {len(line)}", lineno)
        cells.extend(1 if ch == "1" else 0 for ch in line)
    if len(body) != n:
        raise MatrixParseError(f"expected {n} rows, got {len(body)}", min(len(body), n) + 2)
    return BitMatrix(n, m, tuple(cells))


def render_matrix(M: BitMatrix, fmt: str = "grid") -> str:
    rows = ["".join(map(str, r)) for r in M.rows()]
    if fmt == "grid":
        return f"{M.n_rows} {M.n_cols}\n" + "".join(r + "\n" for r in rows)
    if fmt == "pbm":
        body = "".join(" ".join(r) + "\n" for r in rows)
        return f"P1\n{M.n_cols} {M.n_rows}\n" + body
    if fmt == "json":
        return json.dumps({"n": M.n_rows, "m": M.n_cols, "rows": rows}) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
