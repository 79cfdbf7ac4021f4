"""Path/cover data model, certificate verification, and text formats."""

from dataclasses import dataclass

from .errors import FormatError, OutOfRangeError
from .graph import (
    Graph,
    HammingSpec,
    LazyDistances,
    decode_coordinates,
    encode_coordinates,
    format_coordinates,
)

PROVENANCE_FORMULA = "formula-construction"
PROVENANCE_SOLVER = "exact-solver"
PROVENANCE_FILE = "file"
PROVENANCE_TABLE = "base-table"
PROVENANCE_TAGS = (PROVENANCE_FORMULA, PROVENANCE_SOLVER, PROVENANCE_FILE, PROVENANCE_TABLE)


@dataclass(frozen=True)
class Path:
    """Ordered vertex sequence claimed to be an isometric path.

    Distinctness and adjacency are checked at verification time, not here.
    """

    vertices: tuple

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        if not vertices:
            raise ValueError("a path has at least one vertex")
        object.__setattr__(self, "vertices", vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def first(self):
        return self.vertices[0]

    @property
    def last(self):
        return self.vertices[-1]

    def reverse(self):
        return Path(self.vertices[::-1])


def canonical_path(p: Path) -> Path:
    """Orientation with the lexicographically smaller endpoint first.

    Storage never canonicalizes; comparison utilities do.
    """
    return p.reverse() if p.last < p.first else p


@dataclass(frozen=True)
class Cover:
    """A multiset of paths plus provenance metadata; the central certificate object.

    Vertex overlap between paths is permitted (covers are not partitions).
    """

    paths: tuple
    provenance: str = PROVENANCE_FILE
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        if self.provenance not in PROVENANCE_TAGS:
            raise ValueError(f"unknown provenance tag {self.provenance!r}")

    def __len__(self):
        return len(self.paths)


def cover_size(c: Cover) -> int:
    return len(c.paths)


def covered_set(c: Cover) -> set:
    """Union of the vertex sets of all paths."""
    out = set()
    for p in c.paths:
        out.update(p.vertices)
    return out


@dataclass(frozen=True)
class PathVerdict:
    simple: bool
    walk: bool
    isometric: bool

    @property
    def ok(self):
        return self.simple and self.walk and self.isometric


@dataclass(frozen=True)
class VerifyReport:
    """Machine-checkable verdict on a (graph, cover) pair.

    ``valid`` holds iff every path verdict is fully true and ``uncovered``
    is empty (and, in strict mode, the cover is in normal form).
    ``overlap`` counts duplicate vertex incidences across paths and is
    diagnostic only.
    """

    valid: bool
    path_verdicts: tuple
    uncovered: tuple
    size: int
    overlap: int
    normal_form: bool | None = None


def is_isometric_path(g: Graph, d, p: Path) -> bool:
    """True iff p is simple, consecutive vertices are adjacent, and the edge
    length equals the endpoint distance.  A 1-vertex path is isometric by
    convention.  ``d`` is any object with DistanceMatrix-style indexing.
    """
    verts = p.vertices
    for v in verts:
        if not 0 <= v < g.n:
            raise OutOfRangeError(f"path vertex {v} out of range [0,{g.n})")
    if len(set(verts)) != len(verts):
        return False
    for a, b in zip(verts, verts[1:]):
        if not g.has_edge(a, b):
            return False
    return len(verts) - 1 == d[verts[0]][verts[-1]]


def _normal_form_ok(c: Cover) -> bool:
    """Normal form: every path has 2 or 3 vertices and no two 3-vertex paths
    share an end vertex."""
    endpoint_seen = set()
    for p in c.paths:
        if len(p) not in (2, 3):
            return False
        if len(p) == 3:
            for v in (p.first, p.last):
                if v in endpoint_seen:
                    return False
                endpoint_seen.add(v)
    return True


def verify_cover(g: Graph, c: Cover, strict_normal_form: bool = False) -> VerifyReport:
    """Check every path and the coverage of V(g); problems are reported,
    never raised.  Deterministic and side-effect free."""
    dist = LazyDistances(g)
    verdicts = []
    covered = set()
    incidences = 0
    for p in c.paths:
        verts = p.vertices
        in_range = all(0 <= v < g.n for v in verts)
        simple = len(set(verts)) == len(verts)
        walk = in_range and all(g.has_edge(a, b) for a, b in zip(verts, verts[1:]))
        isometric = (
            simple and walk and len(verts) - 1 == dist[verts[0]][verts[-1]]
        )
        verdicts.append(PathVerdict(simple=simple, walk=walk, isometric=isometric))
        for v in verts:
            if 0 <= v < g.n:
                incidences += 1
                covered.add(v)
    uncovered = tuple(sorted(set(range(g.n)) - covered))
    valid = all(v.ok for v in verdicts) and not uncovered
    normal_form = None
    if strict_normal_form:
        normal_form = _normal_form_ok(c)
        valid = valid and normal_form
    return VerifyReport(
        valid=valid,
        path_verdicts=tuple(verdicts),
        uncovered=uncovered,
        size=len(c.paths),
        overlap=incidences - len(covered),
        normal_form=normal_form,
    )


def format_cover(c: Cover, comments=()) -> str:
    """Cover text format: one path per line, space-separated vertex indices.

    Optional comment lines are emitted first, prefixed with ``# ``.
    """
    lines = [f"# {comment}" for comment in comments]
    lines.extend(" ".join(str(v) for v in p.vertices) for p in c.paths)
    return "\n".join(lines) + "\n"


def parse_cover(text: str, provenance: str = PROVENANCE_FILE, note: str = "") -> Cover:
    """Parse the cover text format; ``#`` lines are collected into the note."""
    paths = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        try:
            vertices = tuple(int(tok) for tok in line.split())
        except ValueError as exc:
            raise FormatError(f"line {lineno}: bad vertex index") from exc
        if not vertices:
            raise FormatError(f"line {lineno}: empty path")
        paths.append(Path(vertices))
    return Cover(tuple(paths), provenance=provenance, note=note or "; ".join(comments))


def format_cover_labeled(c: Cover, spec: HammingSpec, comments=()) -> str:
    """Labeled sibling format for Hamming graphs: coordinate tuples per vertex."""
    lines = [f"# {comment}" for comment in comments]
    for p in c.paths:
        coords = (format_coordinates(decode_coordinates(spec, v)) for v in p.vertices)
        lines.append(" ".join(coords))
    return "\n".join(lines) + "\n"


def parse_cover_labeled(
    text: str, spec: HammingSpec, provenance: str = PROVENANCE_FILE, note: str = ""
) -> Cover:
    """Parse the labeled format back to vertex indices via encode_coordinates."""
    paths = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        vertices = []
        for token in line.split():
            if not (token.startswith("(") and token.endswith(")")):
                raise FormatError(f"line {lineno}: expected coordinate tuple, got {token!r}")
            try:
                coords = tuple(int(x) for x in token[1:-1].split(","))
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad coordinate in {token!r}") from exc
            try:
                vertices.append(encode_coordinates(spec, coords))
            except OutOfRangeError as exc:
                raise FormatError(f"line {lineno}: {exc}") from exc
        if not vertices:
            raise FormatError(f"line {lineno}: empty path")
        paths.append(Path(tuple(vertices)))
    return Cover(tuple(paths), provenance=provenance, note=note or "; ".join(comments))
