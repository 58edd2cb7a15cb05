"""Text serialization of binary matrices.

Format (shared across the repo): first line ``ROWS COLS`` as ASCII
decimals, then ROWS lines of exactly COLS characters from {0,1}.
Optional trailing comment lines start with ``#``; the ``#blocks`` comment
carries block sizes for conversion matrices and transformed generators.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .gf2 import BitMatrix


class MatrixFormatError(ValueError):
    """Malformed matrix text."""


def format_matrix(
    m: BitMatrix,
    blocks: Optional[Tuple[int, ...]] = None,
    block_sep: str = ",",
) -> str:
    lines = [f"{m.rows} {m.cols}"]
    for w in m.row_words:
        lines.append("".join(str((w >> j) & 1) for j in range(m.cols)))
    if blocks is not None:
        lines.append("#blocks " + block_sep.join(str(b) for b in blocks))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Tuple[BitMatrix, Optional[Tuple[int, ...]]]:
    """Parse matrix text; returns (matrix, blocks-or-None)."""
    lines = [ln.rstrip("\r") for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"bad header line: {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise MatrixFormatError(f"bad header line: {lines[0]!r}") from exc
    if rows < 1 or cols < 1:
        raise MatrixFormatError("ROWS and COLS must be >= 1")
    body = lines[1:]
    blocks: Optional[Tuple[int, ...]] = None
    row_lines: List[str] = []
    for ln in body:
        if ln.startswith("#"):
            stripped = ln[1:].strip()
            if stripped.startswith("blocks"):
                rest = stripped[len("blocks"):].strip()
                parts = [p for p in re.split(r"[,\s]+", rest) if p]
                try:
                    blocks = tuple(int(p) for p in parts)
                except ValueError as exc:
                    raise MatrixFormatError(f"bad #blocks line: {ln!r}") from exc
            continue
        row_lines.append(ln.strip())
    if len(row_lines) != rows:
        raise MatrixFormatError(
            f"expected {rows} row lines, found {len(row_lines)}"
        )
    matrix_rows = []
    for ln in row_lines:
        if len(ln) != cols or set(ln) - {"0", "1"}:
            raise MatrixFormatError(f"bad row line: {ln!r}")
        matrix_rows.append([int(c) for c in ln])
    return BitMatrix.from_rows(matrix_rows), blocks


def read_matrix(path: Union[str, Path]) -> Tuple[BitMatrix, Optional[Tuple[int, ...]]]:
    return parse_matrix(Path(path).read_text())


def write_matrix(
    path: Union[str, Path],
    m: BitMatrix,
    blocks: Optional[Tuple[int, ...]] = None,
    block_sep: str = ",",
) -> None:
    Path(path).write_text(format_matrix(m, blocks=blocks, block_sep=block_sep))
