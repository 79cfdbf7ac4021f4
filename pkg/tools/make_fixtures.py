#!/usr/bin/env python3
"""Regenerate the base-cover fixture files under src/isopath/fixtures/.

Hamming entries are hand-entered coordinate tables (the starred 2x3x3
variant and the larger composites are expanded here before writing).
Multipartite entries are produced by the exact solver and normalized so
that no two 3-vertex paths share an end vertex.  Every file is verified
(validity plus closed-form size) before it is written; a failing entry
aborts the run so a bad table can never be frozen.

Run from the repository root after an editable install:

    python tools/make_fixtures.py
"""

import sys
from pathlib import Path as FsPath

from isopath.cover import (
    Cover,
    Path,
    PROVENANCE_TABLE,
    format_cover,
    format_cover_labeled,
    verify_cover,
)
from isopath.formulas import ip_hamming2, ip_hamming3, ip_multipartite
from isopath.graph import (
    HammingSpec,
    PartiteSpec,
    encode_coordinates,
    make_complete_multipartite,
    make_hamming,
)
from isopath.solver import solve_min_cover

FIXTURE_DIR = FsPath(__file__).resolve().parent.parent / "src" / "isopath" / "fixtures"

# --- Hamming base tables (coordinate form) ---------------------------------

H2_TABLES = {
    (2, 2): [
        [(0, 0), (0, 1)],
        [(1, 0), (1, 1)],
    ],
    (2, 3): [
        [(0, 0), (0, 1), (1, 1)],
        [(0, 2), (1, 2), (1, 0)],
    ],
    (2, 4): [
        [(0, 0), (0, 1), (1, 1)],
        [(0, 2), (1, 2), (1, 0)],
        [(0, 3), (1, 3)],
    ],
    (3, 3): [
        [(0, 0), (2, 0), (2, 2)],
        [(0, 1), (0, 2), (1, 2)],
        [(1, 0), (1, 1), (2, 1)],
    ],
}

C222 = [
    [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)],
    [(1, 0, 1), (1, 0, 0), (1, 1, 0), (0, 1, 0)],
]

C233 = [
    [(0, 1, 1), (0, 1, 0), (0, 0, 0), (1, 0, 0)],
    [(0, 2, 2), (0, 2, 0), (1, 2, 0), (1, 1, 0)],
    [(0, 2, 1), (1, 2, 1), (1, 1, 1)],
    [(0, 0, 2), (0, 1, 2), (1, 1, 2)],
    [(0, 0, 1), (1, 0, 1), (1, 0, 2), (1, 2, 2)],
]


def c233_star():
    """2x3x3 table with its two 3-vertex paths extended into layers 3 and 4;
    only meaningful inside a host with third factor >= 5."""
    drop = [
        [(0, 2, 1), (1, 2, 1), (1, 1, 1)],
        [(0, 0, 2), (0, 1, 2), (1, 1, 2)],
    ]
    add = [
        [(0, 2, 1), (1, 2, 1), (1, 1, 1), (1, 1, 3)],
        [(0, 0, 2), (0, 1, 2), (1, 1, 2), (1, 1, 4)],
    ]
    return [p for p in C233 if p not in drop] + add


C234 = [
    [(0, 1, 1), (0, 1, 0), (0, 0, 0), (1, 0, 0)],
    [(0, 2, 1), (0, 2, 0), (1, 2, 0), (1, 1, 0)],
    [(0, 2, 3), (0, 2, 2), (1, 2, 2), (1, 1, 2)],
    [(0, 1, 3), (0, 1, 2), (0, 0, 2), (1, 0, 2)],
    [(0, 0, 1), (1, 0, 1), (1, 1, 1), (1, 1, 3)],
    [(1, 2, 1), (1, 2, 3), (1, 0, 3), (0, 0, 3)],
]


def c235():
    return c233_star() + [
        [(0, 1, 4), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
        [(0, 0, 3), (0, 0, 4), (0, 2, 4), (1, 2, 4)],
        [(1, 0, 3), (1, 0, 4)],
    ]


C333 = [
    [(0, 0, 0), (0, 2, 0), (1, 2, 0), (1, 2, 1)],
    [(1, 1, 0), (2, 1, 0), (2, 2, 0), (2, 2, 1)],
    [(0, 2, 1), (0, 1, 1), (1, 1, 1), (1, 1, 2)],
    [(1, 0, 1), (2, 0, 1), (2, 1, 1), (2, 1, 2)],
    [(0, 1, 0), (0, 1, 2), (0, 2, 2), (1, 2, 2)],
    [(0, 0, 1), (0, 0, 2), (2, 0, 2), (2, 2, 2)],
    [(1, 0, 2), (1, 0, 0), (2, 0, 0)],
]

C334 = [
    [(0, 0, 0), (0, 2, 0), (1, 2, 0), (1, 2, 1)],
    [(1, 1, 0), (2, 1, 0), (2, 2, 0), (2, 2, 1)],
    [(0, 2, 1), (0, 1, 1), (1, 1, 1), (1, 1, 2)],
    [(1, 0, 1), (2, 0, 1), (2, 1, 1), (2, 1, 2)],
    [(0, 1, 0), (0, 1, 2), (0, 2, 2), (1, 2, 2)],
    [(0, 0, 2), (2, 0, 2), (2, 2, 2), (2, 2, 3)],
    [(0, 1, 3), (1, 1, 3), (1, 0, 3), (1, 0, 2)],
    [(1, 0, 0), (2, 0, 0), (2, 0, 3), (2, 1, 3)],
    [(0, 0, 1), (0, 0, 3), (0, 2, 3), (1, 2, 3)],
]


def c236():
    return c233_star() + [
        [(0, 0, 4), (0, 0, 3), (1, 0, 3), (1, 2, 3)],
        [(0, 1, 3), (0, 1, 4), (0, 2, 4), (1, 2, 4)],
        [(0, 2, 3), (0, 2, 5), (1, 2, 5), (1, 1, 5)],
        [(0, 1, 5), (0, 0, 5), (1, 0, 5), (1, 0, 4)],
    ]


def c255():
    base = [p for p in c235() if p != [(1, 0, 3), (1, 0, 4)]]
    return base + [
        [(0, 4, 1), (0, 4, 0), (0, 3, 0), (1, 3, 0)],
        [(1, 4, 0), (1, 4, 1), (1, 3, 1), (0, 3, 1)],
        [(0, 4, 3), (0, 4, 2), (0, 3, 2), (1, 3, 2)],
        [(1, 4, 2), (1, 4, 3), (1, 3, 3), (0, 3, 3)],
        [(1, 0, 3), (1, 0, 4), (1, 4, 4)],
        [(0, 4, 4), (0, 3, 4), (1, 3, 4)],
    ]


def c355():
    base = [p for p in c235() if p != [(1, 0, 3), (1, 0, 4)]]
    return base + [
        [(0, 4, 0), (2, 4, 0), (2, 0, 0), (2, 0, 1)],
        [(0, 3, 0), (2, 3, 0), (2, 1, 0), (2, 1, 1)],
        [(0, 4, 1), (0, 3, 1), (1, 3, 1), (1, 3, 0)],
        [(1, 4, 0), (1, 4, 1), (2, 4, 1), (2, 2, 1)],
        [(1, 0, 3), (2, 0, 3), (2, 2, 3), (2, 2, 0)],
        [(1, 0, 4), (2, 0, 4), (2, 3, 4), (2, 3, 1)],
        [(0, 3, 2), (2, 3, 2), (2, 1, 2), (2, 1, 3)],
        [(0, 4, 4), (0, 4, 2), (2, 4, 2), (2, 0, 2)],
        [(0, 4, 3), (1, 4, 3), (1, 3, 3), (1, 3, 2)],
        [(0, 3, 3), (2, 3, 3), (2, 4, 3), (2, 4, 4)],
        [(0, 3, 4), (1, 3, 4), (1, 4, 4), (1, 4, 2)],
        [(2, 2, 2), (2, 2, 4), (2, 1, 4)],
    ]


STAR_NOTE = "derived: 2x3x3 entry with its two 3-vertex paths extended into layers 3 and 4"
H3_TABLES = {
    (2, 2, 2): (C222, []),
    (2, 3, 3): (C233, []),
    (2, 3, 4): (C234, []),
    (2, 3, 5): (c235(), [STAR_NOTE + ", plus 3 paths on layers 3-4"]),
    (3, 3, 3): (C333, []),
    (3, 3, 4): (C334, []),
    (2, 3, 6): (c236(), [STAR_NOTE + ", plus 4 paths on layers 3-5"]),
    (2, 5, 5): (
        c255(),
        [
            "derived: 2x3x5 entry minus the 2-vertex path (1,0,3)(1,0,4),",
            "plus 6 paths covering rows 3-4; axis k of the 2x3x5 box maps to axis k here",
        ],
    ),
    (3, 5, 5): (
        c355(),
        [
            "derived: 2x3x5 entry minus the 2-vertex path (1,0,3)(1,0,4),",
            "plus 12 paths covering layer 2 and rows 3-4;",
            "axis k of the 2x3x5 box maps to axis k here",
        ],
    ),
}

# The small balanced-case covers the reduction bottoms out in; produced by
# the solver, frozen here, never regenerated at runtime.
BALANCED_BASE_KEYS = [
    (2, 1),
    (2, 2),
    (3, 2),
    (2, 2, 1),
    (4, 2),
    (4, 1, 1),
    (3, 3),
    (3, 2, 1),
    (2, 2, 2),
    (2, 2, 1, 1),
    (4, 3),
    (4, 2, 1),
    (3, 2, 2),
    (2, 2, 2, 1),
    (5, 3),
    (5, 2, 1),
    (4, 4),
    (4, 3, 1),
    (4, 2, 2),
    (4, 2, 1, 1),
    (3, 3, 2),
    (3, 2, 2, 1),
    (2, 2, 2, 2),
    (2, 2, 2, 1, 1),
]


def balanced_keys_up_to(limit):
    """All size vectors with r >= 2, n <= limit in the ceil(n/3) case."""
    found = []

    def partitions(total, largest, prefix):
        if total == 0:
            if len(prefix) >= 2:
                found.append(tuple(prefix))
            return
        for part in range(min(total, largest), 0, -1):
            partitions(total - part, part, prefix + [part])

    for n in range(2, limit + 1):
        partitions(n, n, [])
    return [
        key
        for key in found
        if ip_multipartite(PartiteSpec(key)).case_tag == "BALANCED"
    ]


def normalize_multipartite(paths):
    """Shrink later 3-vertex paths that share an end vertex with an earlier
    one; the shared vertex stays covered by the earlier path."""
    work = [list(p.vertices) for p in paths]
    while True:
        seen = set()
        shrink_at = None
        shared = None
        for idx, p in enumerate(work):
            if len(p) != 3:
                continue
            if p[0] in seen or p[-1] in seen:
                shrink_at = idx
                shared = p[0] if p[0] in seen else p[-1]
                break
            seen.update((p[0], p[-1]))
        if shrink_at is None:
            return [Path(tuple(p)) for p in work]
        p = work[shrink_at]
        work[shrink_at] = p[1:] if p[0] == shared else p[:2]


def check(cover, graph, expected, name, strict=False):
    report = verify_cover(graph, cover, strict_normal_form=strict)
    if not report.valid:
        raise SystemExit(f"{name}: cover failed verification: {report}")
    if len(cover.paths) != expected:
        raise SystemExit(f"{name}: {len(cover.paths)} paths, expected {expected}")


def write_hamming_fixtures():
    for key, table in H2_TABLES.items():
        spec = HammingSpec(key)
        paths = tuple(
            Path(tuple(encode_coordinates(spec, v) for v in p)) for p in table
        )
        cover = Cover(paths, provenance=PROVENANCE_TABLE)
        check(cover, make_hamming(spec), ip_hamming2(*key).value, f"hamming2 {key}")
        name = "hamming2_" + "-".join(str(s) for s in key) + ".cover"
        comments = [
            "family: hamming2",
            f"key: {','.join(str(s) for s in key)}",
            f"paths: {len(paths)}",
            "source: built-in base table, entered by hand",
        ]
        text = format_cover_labeled(cover, spec, comments=comments)
        (FIXTURE_DIR / name).write_text(text, encoding="ascii")
        print(f"wrote {name} ({len(paths)} paths)")
    for key, (table, extra) in H3_TABLES.items():
        spec = HammingSpec(key)
        paths = tuple(
            Path(tuple(encode_coordinates(spec, v) for v in p)) for p in table
        )
        cover = Cover(paths, provenance=PROVENANCE_TABLE)
        check(cover, make_hamming(spec), ip_hamming3(*key).value, f"hamming3 {key}")
        name = "hamming3_" + "-".join(str(s) for s in key) + ".cover"
        comments = [
            "family: hamming3",
            f"key: {','.join(str(s) for s in key)}",
            f"paths: {len(paths)}",
            "source: built-in base table, entered by hand",
        ] + extra
        text = format_cover_labeled(cover, spec, comments=comments)
        (FIXTURE_DIR / name).write_text(text, encoding="ascii")
        print(f"wrote {name} ({len(paths)} paths)")


def write_multipartite_fixtures():
    keys = balanced_keys_up_to(8)
    if sorted(keys) != sorted(BALANCED_BASE_KEYS):
        raise SystemExit(
            f"balanced base keys changed: expected {sorted(BALANCED_BASE_KEYS)}, "
            f"enumerated {sorted(keys)}"
        )
    for key in keys:
        spec = PartiteSpec(key)
        graph = make_complete_multipartite(spec)
        expected = ip_multipartite(spec).value
        result = solve_min_cover(graph)
        if not result.proof_of_optimality:
            raise SystemExit(f"multipartite {key}: solver budget exhausted")
        if result.size != expected:
            raise SystemExit(
                f"multipartite {key}: solver found {result.size}, formula {expected}"
            )
        paths = normalize_multipartite(result.optimum.paths)
        cover = Cover(tuple(paths), provenance=PROVENANCE_TABLE)
        check(cover, graph, expected, f"multipartite {key}", strict=True)
        name = "multipartite_" + "-".join(str(s) for s in key) + ".cover"
        comments = [
            "family: multipartite",
            f"key: {','.join(str(s) for s in key)}",
            f"paths: {len(paths)}",
            "source: exact branch-and-bound solver,",
            "normalized so no two 3-vertex paths share an end vertex",
        ]
        text = format_cover(cover, comments=comments)
        (FIXTURE_DIR / name).write_text(text, encoding="ascii")
        print(f"wrote {name} ({len(paths)} paths)")


def main():
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    write_hamming_fixtures()
    write_multipartite_fixtures()
    print(f"fixtures in {FIXTURE_DIR}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
