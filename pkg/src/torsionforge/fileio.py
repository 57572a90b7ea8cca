"""Text formats: matrices ("rows cols" header then entries, or a JSON
object with a "rows" field), valid sequences (one ordering per line), and
the canonical facet format (one ascending triangle per line, lines sorted,
newline-terminated) that makes golden files bit-exact.
"""

from __future__ import annotations

import json

from .disc_complex import DiscComplexSpec
from .exactmat import IntMatrix
from .triangulation import SimplicialComplex2
from .valid_sequences import ValidSequence


class FileFormatError(ValueError):
    """Malformed input file; carries a 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None and col is not None:
            message = f"line {line}, col {col}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _tokens_with_positions(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        col = 1
        for tok in line.split():
            col = line.index(tok, col - 1) + 1
            yield tok, lineno, col
            col += len(tok)


def _parse_int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FileFormatError(f"expected an integer, got {tok!r}", line, col) from None


def read_matrix(text: str) -> IntMatrix:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _read_matrix_json(text)
    toks = list(_tokens_with_positions(text))
    if len(toks) < 2:
        raise FileFormatError("matrix file needs a 'rows cols' header", 1, 1)
    rows = _parse_int(*toks[0])
    cols = _parse_int(*toks[1])
    if rows < 1 or cols < 1:
        raise FileFormatError(f"matrix dimensions {rows}x{cols} must be positive", toks[0][1], toks[0][2])
    need = rows * cols
    body = toks[2:]
    if len(body) < need:
        raise FileFormatError(f"expected {need} entries, file has {len(body)}", toks[-1][1], toks[-1][2])
    if len(body) > need:
        extra = body[need]
        raise FileFormatError("unexpected extra token after matrix entries", extra[1], extra[2])
    entries = [_parse_int(*t) for t in body]
    return IntMatrix(rows, cols, tuple(entries))


def _read_matrix_json(text: str) -> IntMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"bad JSON: {e.msg}", e.lineno, e.colno) from None
    if not isinstance(obj, dict) or "rows" not in obj:
        raise FileFormatError('matrix object needs a "rows" field')
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FileFormatError('"rows" must be a non-empty list of integer lists')
    for r in rows:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise FileFormatError(f"non-integer matrix entry {x!r}")
    try:
        return IntMatrix.from_rows(rows)
    except ValueError as e:
        raise FileFormatError(str(e)) from None


def write_matrix(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(x) for x in m.row(i)) for i in range(m.rows))
    return "\n".join(lines) + "\n"


def read_sequence(text: str) -> ValidSequence:
    lines = [l for l in text.splitlines() if l.strip()]
    if not lines:
        raise FileFormatError("empty sequence file", 1, 1)
    perms = []
    for lineno, line in enumerate(lines, start=1):
        perm = []
        col = 1
        for tok in line.split():
            col = line.index(tok, col - 1) + 1
            perm.append(_parse_int(tok, lineno, col))
            col += len(tok)
        perms.append(tuple(perm))
    n = len(perms)
    for lineno, p in enumerate(perms, start=1):
        if len(p) != n:
            raise FileFormatError(f"ordering has {len(p)} labels, expected {n}", lineno, 1)
    return ValidSequence(n, tuple(perms))


def write_sequence(seq: ValidSequence) -> str:
    return "\n".join(" ".join(str(x) for x in p) for p in seq.perms) + "\n"


def read_facets(text: str) -> SimplicialComplex2:
    triangles = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        toks = line.split()
        if len(toks) != 3:
            raise FileFormatError(f"facet line needs 3 vertex ids, got {len(toks)}", lineno, 1)
        col = 1
        ids = []
        for tok in toks:
            col = line.index(tok, col - 1) + 1
            ids.append(_parse_int(tok, lineno, col))
            col += len(tok)
        a, b, c = ids
        if not a < b < c:
            raise FileFormatError(f"vertex ids must be strictly ascending, got {a} {b} {c}", lineno, 1)
        if a < 0:
            raise FileFormatError(f"negative vertex id {a}", lineno, 1)
        triangles.append((a, b, c))
    if not triangles:
        raise FileFormatError("facet file contains no triangles", 1, 1)
    edges = set()
    verts = set()
    for a, b, c in triangles:
        edges.update(((a, b), (a, c), (b, c)))
        verts.update((a, b, c))
    return SimplicialComplex2(
        labels={v: str(v) for v in sorted(verts)},
        edges=sorted(edges),
        triangles=sorted(set(triangles)),
    )


def write_facets(k: SimplicialComplex2) -> str:
    lines = [f"{a} {b} {c}" for a, b, c in sorted(tuple(sorted(t)) for t in k.triangles)]
    return "\n".join(lines) + "\n"


def complex_to_json(k: SimplicialComplex2) -> str:
    obj = {
        "vertices": [[v, k.labels[v]] for v in sorted(k.labels)],
        "edges": [list(e) for e in sorted(k.edges)],
        "triangles": [list(t) for t in sorted(k.triangles)],
    }
    return json.dumps(obj, indent=1) + "\n"


def complex_from_json(text: str) -> SimplicialComplex2:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"bad JSON: {e.msg}", e.lineno, e.colno) from None
    try:
        labels = {int(v): str(label) for v, label in obj["vertices"]}
        edges = sorted(tuple(int(x) for x in e) for e in obj["edges"])
        triangles = sorted(tuple(int(x) for x in t) for t in obj["triangles"])
    except (KeyError, TypeError, ValueError) as e:
        raise FileFormatError(f"bad complex object: {e}") from None
    return SimplicialComplex2(labels=labels, edges=edges, triangles=triangles)


def read_complex(text: str) -> SimplicialComplex2:
    """Facet format by default; a leading '{' switches to the JSON form."""
    if text.lstrip().startswith("{"):
        return complex_from_json(text)
    return read_facets(text)


def disc_spec_to_json(spec: DiscComplexSpec) -> str:
    """Words serialized as signed integers: sign = orientation, magnitude = cycle."""
    return json.dumps({"n_cycles": spec.n_cycles, "discs": [list(w) for w in spec.discs]}) + "\n"


def disc_spec_from_json(text: str) -> DiscComplexSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"bad JSON: {e.msg}", e.lineno, e.colno) from None
    if not isinstance(obj, dict) or "n_cycles" not in obj or "discs" not in obj:
        raise FileFormatError('disc spec object needs "n_cycles" and "discs" fields')
    discs = obj["discs"]
    if not isinstance(discs, list) or not all(isinstance(w, list) for w in discs):
        raise FileFormatError('"discs" must be a list of signed-integer lists')
    for w in discs:
        for x in w:
            if not isinstance(x, int) or isinstance(x, bool):
                raise FileFormatError(f"non-integer word letter {x!r}")
    try:
        return DiscComplexSpec(int(obj["n_cycles"]), tuple(tuple(w) for w in discs))
    except (TypeError, ValueError) as e:
        raise FileFormatError(f"bad disc spec: {e}") from None
