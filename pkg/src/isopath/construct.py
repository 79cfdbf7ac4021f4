"""Explicit optimal cover construction for both graph families.

Multipartite covers follow a recursive reduction: repeatedly peel off one
isometric 3-path chosen by the active case, then finish from a base cover.
Hamming covers recursively split a coordinate range and embed covers of
the slices, which are distance-invariant induced subgraphs, bottoming out
in the built-in base-cover table.

Tie-breaking everywhere is "lowest available index" so identical inputs
produce byte-identical covers.
"""

from dataclasses import dataclass

from .base_covers import (
    FAMILY_HAMMING2,
    FAMILY_HAMMING3,
    FAMILY_MULTIPARTITE,
    base_cover_lookup,
)
from .cover import PROVENANCE_FORMULA, Cover, Path
from .errors import ConstructionError, InvalidSpecError, OutOfRangeError
from .formulas import ip_hamming2, ip_hamming3, ip_multipartite
from .graph import HammingSpec, PartiteSpec, decode_coordinates, encode_coordinates


@dataclass(frozen=True)
class SliceEmbedding:
    """Offset-based injective coordinate maps from a small Hamming spec into
    a larger one; the image is a coordinate box, hence distance-invariant."""

    source: HammingSpec
    target: HammingSpec
    offsets: tuple

    def __post_init__(self):
        offsets = tuple(int(o) for o in self.offsets)
        object.__setattr__(self, "offsets", offsets)
        if self.source.r != self.target.r or len(offsets) != self.source.r:
            raise InvalidSpecError("embedding needs one offset per coordinate")
        for off, src, tgt in zip(offsets, self.source.factors, self.target.factors):
            if off < 0 or off + src > tgt:
                raise OutOfRangeError(
                    f"offset {off} pushes factor {src} outside target {tgt}"
                )


def embed_cover(c: Cover, e: SliceEmbedding) -> Cover:
    """Map each path coordinate-wise through the embedding; structure unchanged."""
    paths = []
    for p in c.paths:
        verts = []
        for v in p.vertices:
            coords = decode_coordinates(e.source, v)
            shifted = tuple(x + off for x, off in zip(coords, e.offsets))
            verts.append(encode_coordinates(e.target, shifted))
        paths.append(Path(tuple(verts)))
    return Cover(tuple(paths), provenance=c.provenance, note=c.note)


# --- multipartite construction -------------------------------------------


def _emit_dominant_base(remaining, ranked, paths):
    # K_{n1,1}: pair up the big part through the singleton hub.
    big = remaining[ranked[0][1]]
    hub = remaining[ranked[1][1]][0]
    for k in range(len(big) // 2):
        paths.append(Path((big[2 * k], hub, big[2 * k + 1])))
    if len(big) % 2 == 1:
        paths.append(Path((big[-1], hub)))


def _emit_complete_base(remaining, paths):
    # All parts have one vertex left: a clique, covered by 2-paths in index
    # order; an odd count reuses the second-to-last vertex.
    verts = sorted(vs[0] for vs in remaining if vs)
    for k in range(len(verts) // 2):
        paths.append(Path((verts[2 * k], verts[2 * k + 1])))
    if len(verts) % 2 == 1:
        paths.append(Path((verts[-2], verts[-1])))


def _emit_221_base(remaining, ranked, paths):
    a1, a2 = remaining[ranked[0][1]][:2]
    b = remaining[ranked[1][1]][0]
    c = remaining[ranked[2][1]][0]
    paths.append(Path((a1, b, a2)))
    paths.append(Path((b, c)))


def _emit_table_base(remaining, ranked, paths):
    key = tuple(size for size, _ in ranked)
    base = base_cover_lookup(FAMILY_MULTIPARTITE, key)
    offsets = PartiteSpec(key).part_offsets()
    translate = {}
    for rank, (size, part) in enumerate(ranked):
        for o in range(size):
            translate[offsets[rank] + o] = remaining[part][o]
    for p in base.paths:
        paths.append(Path(tuple(translate[v] for v in p.vertices)))


def cover_multipartite(spec: PartiteSpec) -> Cover:
    """Valid cover of make_complete_multipartite(spec) with exactly
    ip_multipartite(spec).value paths, in normal form."""
    if spec.r < 2:
        raise InvalidSpecError("at least two parts are required")
    expected = ip_multipartite(spec).value
    offsets = spec.part_offsets()
    remaining = [
        list(range(off, off + size)) for off, size in zip(offsets, spec.sizes)
    ]
    paths = []
    run_case = None
    while True:
        active = [(len(vs), idx) for idx, vs in enumerate(remaining) if vs]
        if not active:
            break
        ranked = sorted(active, key=lambda t: (-t[0], t[1]))
        sizes_now = tuple(size for size, _ in ranked)
        if len(sizes_now) == 1:
            raise ConstructionError(f"reduction of {spec.sizes} left one part")
        cur = PartiteSpec(sizes_now)
        case = ip_multipartite(cur).case_tag
        # the reduction proofs keep the case constant along the whole run
        if run_case is not None and case != run_case:
            raise ConstructionError(
                f"case flipped from {run_case} to {case} at sizes {sizes_now}"
            )
        run_case = case
        n, n1, alpha = cur.n, sizes_now[0], cur.alpha

        if case == "DOMINANT_PART":
            if n - n1 == 1:
                _emit_dominant_base(remaining, ranked, paths)
                break
            big = remaining[ranked[0][1]]
            a1, a2 = big[0], big[1]
            del big[:2]
            donor = remaining[ranked[1][1]]
            paths.append(Path((a1, donor.pop(0), a2)))
        elif case == "MANY_ODD":
            if n == alpha:
                _emit_complete_base(remaining, paths)
                break
            if sizes_now == (2, 1, 1):
                _emit_221_base(remaining, ranked, paths)
                break
            odd_parts = [
                idx
                for size, idx in active
                if size % 2 == 1 and idx != ranked[0][1]
            ]
            if not odd_parts:
                raise ConstructionError(f"no odd donor part at sizes {sizes_now}")
            big = remaining[ranked[0][1]]
            a1, a2 = big[0], big[1]
            del big[:2]
            donor = remaining[min(odd_parts)]
            paths.append(Path((a1, donor.pop(0), a2)))
        else:  # BALANCED
            if n <= 8:
                _emit_table_base(remaining, ranked, paths)
                break
            odd_ranks = [
                k for k in range(1, len(ranked)) if ranked[k][0] % 2 == 1
            ]
            j = max(odd_ranks) if odd_ranks else len(ranked) - 1
            big = remaining[ranked[0][1]]
            a1, a2 = big[0], big[1]
            del big[:2]
            donor = remaining[ranked[j][1]]
            paths.append(Path((a1, donor.pop(0), a2)))
    if len(paths) != expected:
        raise ConstructionError(
            f"built {len(paths)} paths for sizes {spec.sizes}, formula says {expected}"
        )
    return Cover(
        tuple(paths),
        provenance=PROVENANCE_FORMULA,
        note=f"complete multipartite {','.join(str(s) for s in spec.sizes)}",
    )


# --- Hamming constructions -------------------------------------------------
#
# Internally paths are tuples of coordinate tuples; vertex indices are only
# produced at the very end, on the caller's factor order.


def _base_coord_paths(family, key):
    cover = base_cover_lookup(family, key)
    spec = HammingSpec(key)
    return [
        tuple(decode_coordinates(spec, v) for v in p.vertices) for p in cover.paths
    ]


def _shift(paths, offsets):
    return [
        tuple(tuple(c + o for c, o in zip(v, offsets)) for v in p) for p in paths
    ]


def _apply_axes(paths, positions):
    # new coordinate i reads old coordinate positions[i]
    return [tuple(tuple(v[k] for k in positions) for v in p) for p in paths]


def _sorting_permutation(factors):
    order = sorted(range(len(factors)), key=lambda i: (factors[i], i))
    inverse = [0] * len(order)
    for new_axis, old_axis in enumerate(order):
        inverse[old_axis] = new_axis
    return tuple(order), tuple(inverse)


def _h2_paths(a, b):
    if a > b:
        return _apply_axes(_h2_paths(b, a), (1, 0))
    if (a, b) in ((2, 2), (2, 3), (2, 4), (3, 3)):
        return _base_coord_paths(FAMILY_HAMMING2, (a, b))
    if b == 4:
        return _shift(_h2_paths(a, 2), (0, 0)) + _shift(_h2_paths(a, 2), (0, 2))
    return _shift(_h2_paths(a, 3), (0, 0)) + _shift(_h2_paths(a, b - 3), (0, 3))


def cover_hamming2(n1: int, n2: int) -> Cover:
    """Valid cover of K_{n1} x K_{n2} of size ceil(n1*n2/3): base tables for
    both factors <= 4, otherwise split one factor range into 3 + rest."""
    expected = ip_hamming2(n1, n2).value
    spec = HammingSpec((n1, n2))
    paths = tuple(
        Path(tuple(encode_coordinates(spec, v) for v in p)) for p in _h2_paths(n1, n2)
    )
    if len(paths) != expected:
        raise ConstructionError(
            f"built {len(paths)} paths for K_{n1} x K_{n2}, formula says {expected}"
        )
    return Cover(paths, provenance=PROVENANCE_FORMULA, note=f"hamming {n1},{n2}")


_H3_BASE_KEYS = (
    (2, 3, 3),
    (2, 3, 4),
    (2, 3, 5),
    (3, 3, 3),
    (3, 3, 4),
    (2, 3, 6),
    (2, 5, 5),
    (3, 5, 5),
)

# composite entries: split one factor of the key into two stacked slices
_H3_COMPOSITES = {
    (2, 5, 6): (((2, 3, 6), (0, 0, 0)), ((2, 2, 6), (0, 3, 0))),
    (3, 3, 5): (((3, 3, 2), (0, 0, 0)), ((3, 3, 3), (0, 0, 2))),
    (5, 5, 5): (((5, 5, 3), (0, 0, 0)), ((5, 5, 2), (0, 0, 3))),
}


def _h3_paths(factors):
    order, inverse = _sorting_permutation(factors)
    canonical = tuple(factors[i] for i in order)
    paths = _h3_sorted(canonical)
    if order == (0, 1, 2):
        return paths
    return _apply_axes(paths, inverse)


def _h3_sorted(f):
    a, b, c = f
    if a % 2 == 0 and b % 2 == 0 and c % 2 == 0:
        block = _base_coord_paths(FAMILY_HAMMING3, (2, 2, 2))
        out = []
        for i in range(a // 2):
            for j in range(b // 2):
                for k in range(c // 2):
                    out.extend(_shift(block, (2 * i, 2 * j, 2 * k)))
        return out
    if a == 2 and b == 2 and c % 2 == 1:
        # c+1 paths from (c+1)/2 blocks; the last two overlap on layer c-2
        block = _base_coord_paths(FAMILY_HAMMING3, (2, 2, 2))
        layers = [2 * k for k in range((c - 1) // 2)] + [c - 2]
        out = []
        for layer in layers:
            out.extend(_shift(block, (0, 0, layer)))
        return out
    if f in _H3_BASE_KEYS:
        return _base_coord_paths(FAMILY_HAMMING3, f)
    if f in _H3_COMPOSITES:
        out = []
        for sub_factors, offsets in _H3_COMPOSITES[f]:
            out.extend(_shift(_h3_paths(sub_factors), offsets))
        return out
    if c >= 7 or (c == 6 and a >= 3):
        head = _shift(_h3_paths((a, b, 4)), (0, 0, 0))
        tail = _shift(_h3_paths((a, b, c - 4)), (0, 0, 4))
        return head + tail
    if 4 in f:
        # largest factor is >= 4 here; split it into 2 + rest
        head = _shift(_h3_paths((a, b, 2)), (0, 0, 0))
        tail = _shift(_h3_paths((a, b, c - 2)), (0, 0, 2))
        return head + tail
    raise ConstructionError(f"no construction rule for factors {f}")


def cover_hamming3(n1: int, n2: int, n3: int) -> Cover:
    """Valid cover of K_{n1} x K_{n2} x K_{n3} matching ip_hamming3: 2x2x2
    tiling for all-even factors, overlapping blocks for the exceptional
    (2,2,odd) family, base/composite tables and range splits otherwise."""
    expected = ip_hamming3(n1, n2, n3).value
    spec = HammingSpec((n1, n2, n3))
    paths = tuple(
        Path(tuple(encode_coordinates(spec, v) for v in p))
        for p in _h3_paths((n1, n2, n3))
    )
    if len(paths) != expected:
        raise ConstructionError(
            f"built {len(paths)} paths for K_{n1} x K_{n2} x K_{n3}, "
            f"formula says {expected}"
        )
    return Cover(
        paths, provenance=PROVENANCE_FORMULA, note=f"hamming {n1},{n2},{n3}"
    )
