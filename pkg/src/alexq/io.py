"""Plain-text matrix and vector files.

A matrix file holds the order ``n`` on its first line, then ``n`` lines of
``n`` whitespace-separated integers in ``1..n``. A phi file is one line of
``n`` integers, the images of ``1..n``. Trailing blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path


class MatrixFileError(ValueError):
    """Parse failure with a 1-based line and column (column 0 = whole line)."""

    def __init__(self, message: str, line: int, column: int = 0, source: str | None = None):
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")
        self.line = line
        self.column = column


def _lines(text: str) -> list[str]:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def _token_columns(line: str) -> list[tuple[int, str]]:
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int(tok: str, line: int, column: int, source) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MatrixFileError(f"expected an integer, got {tok!r}", line, column, source) from None


def parse_matrix(text: str, source: str | None = None) -> list[list[int]]:
    lines = _lines(text)
    if not lines:
        raise MatrixFileError("empty file; expected the order n on the first line", 1, 0, source)
    head = _token_columns(lines[0])
    if len(head) != 1:
        raise MatrixFileError("first line must hold only the order n", 1, 0, source)
    n = _int(head[0][1], 1, head[0][0], source)
    if n < 1:
        raise MatrixFileError(f"order must be positive, got {n}", 1, head[0][0], source)
    body = lines[1:]
    if len(body) != n:
        # point at the first missing line, or the first surplus one
        line = len(lines) + 1 if len(body) < n else n + 2
        raise MatrixFileError(f"expected {n} rows, found {len(body)}", line, 0, source)
    rows = []
    for r, line in enumerate(body, start=2):
        toks = _token_columns(line)
        if len(toks) != n:
            raise MatrixFileError(f"expected {n} entries, found {len(toks)}", r, 0, source)
        row = []
        for col, tok in toks:
            v = _int(tok, r, col, source)
            if not 1 <= v <= n:
                raise MatrixFileError(f"entry {v} is outside 1..{n}", r, col, source)
            row.append(v)
        rows.append(row)
    return rows


def format_matrix(table) -> str:
    rows = table.tolist() if hasattr(table, "tolist") else [list(r) for r in table]
    n = len(rows)
    width = len(str(n))
    body = "\n".join(" ".join(f"{v:>{width}}" for v in row) for row in rows)
    return f"{n}\n{body}\n"


def parse_phi(text: str, n: int | None = None, source: str | None = None) -> tuple[int, ...]:
    lines = _lines(text)
    if len(lines) != 1:
        raise MatrixFileError(f"phi file must be a single line, found {len(lines)}", max(len(lines), 1), 0, source)
    toks = _token_columns(lines[0])
    if n is not None and len(toks) != n:
        raise MatrixFileError(f"expected {n} entries, found {len(toks)}", 1, 0, source)
    m = len(toks)
    out = []
    for col, tok in toks:
        v = _int(tok, 1, col, source)
        if not 1 <= v <= m:
            raise MatrixFileError(f"entry {v} is outside 1..{m}", 1, col, source)
        out.append(v)
    return tuple(out)


def format_phi(phi) -> str:
    return " ".join(str(int(v)) for v in phi) + "\n"


def read_matrix(path) -> list[list[int]]:
    return parse_matrix(Path(path).read_text(), source=str(path))


def read_phi(path, n: int | None = None) -> tuple[int, ...]:
    return parse_phi(Path(path).read_text(), n, source=str(path))


def write_matrix(path, table) -> None:
    Path(path).write_text(format_matrix(table))
