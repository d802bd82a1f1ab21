"""Regenerate the golden fixtures from the transcribed source tables.

The 34x34 matrix is stored as monomial exponents (null = zero entry), the
reduced 9x9 block as ascending coefficient lists, and the symbolic table as
sparse {exponent-pair: coefficient} cells. Transcription sanity: the big
matrix must be symmetric and its diagonal must be the cell degrees.
"""

import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent
OUT = HERE.parent / "src" / "diagram_gram" / "fixtures" / "v1"

# -- 34x34 Gram matrix, rows d1..d34; tokens: 0 -> zero entry, n -> x**n ------
RAW = """
d1  | 1 0 0 0 | 0 0 0 0 0 0 | 0 0 0 | 1 0 1 0 1 0 | 1 0 1 0 1 0 | 0 0 0 0 0 0 | 1 1 1
d2  | 0 1 0 0 | 0 0 0 0 0 0 | 0 0 0 | 1 0 0 1 0 1 | 0 1 0 1 1 0 | 0 0 0 0 0 0 | 1 1 1
d3  | 0 0 1 0 | 0 0 0 0 0 0 | 0 0 0 | 0 1 0 1 1 0 | 1 0 0 1 0 1 | 0 0 0 0 0 0 | 1 1 1
d4  | 0 0 0 1 | 0 0 0 0 0 0 | 0 0 0 | 0 1 1 0 0 1 | 0 1 1 0 0 1 | 0 0 0 0 0 0 | 1 1 1
d5  | 0 0 0 0 | x 0 0 0 0 0 | 0 0 0 | x 0 0 0 0 0 | 0 0 0 0 0 0 | 0 x 0 x 0 0 | x x 0
d6  | 0 0 0 0 | 0 x 0 0 0 0 | 0 0 0 | 0 x 0 0 0 0 | 0 0 0 0 0 0 | 0 x 0 x 0 0 | x x 0
d7  | 0 0 0 0 | 0 0 x 0 0 0 | 0 0 0 | 0 0 x 0 0 0 | 0 0 0 0 0 0 | x 0 0 0 0 x | x 0 x
d8  | 0 0 0 0 | 0 0 0 x 0 0 | 0 0 0 | 0 0 0 x 0 0 | 0 0 0 0 0 0 | x 0 0 0 0 x | x 0 x
d9  | 0 0 0 0 | 0 0 0 0 x 0 | 0 0 0 | 0 0 0 0 x 0 | 0 0 0 0 0 0 | 0 0 x 0 x 0 | 0 x x
d10 | 0 0 0 0 | 0 0 0 0 0 x | 0 0 0 | 0 0 0 0 0 x | 0 0 0 0 0 0 | 0 0 x 0 x 0 | 0 x x
d11 | 0 0 0 0 | 0 0 0 0 0 0 | x 0 0 | 0 0 0 0 0 0 | x x 0 0 0 0 | x x 0 0 0 0 | x 0 0
d12 | 0 0 0 0 | 0 0 0 0 0 0 | 0 x 0 | 0 0 0 0 0 0 | 0 0 x x 0 0 | 0 0 x x 0 0 | 0 x 0
d13 | 0 0 0 0 | 0 0 0 0 0 0 | 0 0 x | 0 0 0 0 0 0 | 0 0 0 0 x x | 0 0 0 0 x x | 0 0 x
d14 | 1 1 0 0 | x 0 0 0 0 0 | 0 0 0 | x2 0 1 1 1 1 | 1 1 1 1 0 0 | 0 x 0 x x 0 | x2 x2 0
d15 | 0 0 1 1 | 0 x 0 0 0 0 | 0 0 0 | 0 x2 1 1 1 1 | 1 1 1 1 0 0 | 0 x 0 x x 0 | x2 x2 0
d16 | 1 0 0 1 | 0 0 x 0 0 0 | 0 0 0 | 1 1 x2 0 1 1 | 1 1 0 0 1 1 | x 0 0 0 0 x | x2 0 x2
d17 | 0 1 1 0 | 0 0 0 x 0 0 | 0 0 0 | 1 1 0 x2 1 1 | 1 1 0 0 1 1 | x 0 0 0 0 x | x2 0 x2
d18 | 1 0 1 0 | 0 0 0 0 x 0 | 0 0 0 | 1 1 1 1 x2 0 | 0 0 1 1 1 1 | 0 0 x 0 x 0 | 0 x2 x2
d19 | 0 1 0 1 | 0 0 0 0 0 x | 0 0 0 | 1 1 1 1 0 x2 | 0 0 1 1 1 1 | 0 0 x 0 x 0 | 0 x2 x2
d20 | 1 0 1 0 | 0 0 0 0 0 0 | x 0 0 | 1 1 1 1 0 0 | x2 x 1 1 1 1 | x x 0 0 0 0 | x2 0 0
d21 | 0 1 0 1 | 0 0 0 0 0 0 | x 0 0 | 1 1 1 1 0 0 | x x2 1 1 1 1 | x x 0 0 0 0 | x2 0 0
d22 | 1 0 0 1 | 0 0 0 0 0 0 | 0 x 0 | 1 1 0 0 1 1 | 1 1 x2 x 1 1 | 0 0 x x 0 0 | 0 x2 0
d23 | 0 1 1 0 | 0 0 0 0 0 0 | 0 x 0 | 1 1 0 0 1 1 | 1 1 x x2 1 1 | 0 0 x x 0 0 | 0 x2 0
d24 | 1 1 0 0 | 0 0 0 0 0 0 | 0 0 x | 0 0 1 1 1 1 | 1 1 1 1 x2 x | 0 0 0 0 x x | 0 0 x2
d25 | 0 0 1 1 | 0 0 0 0 0 0 | 0 0 x | 0 0 1 1 1 1 | 1 1 1 1 x x2 | 0 0 0 0 x x | 0 0 x2
d26 | 0 0 0 0 | 0 0 x x 0 0 | x 0 0 | 0 0 x x 0 0 | x x 0 0 0 0 | x3 x2 0 0 0 0 | x3 0 0
d27 | 0 0 0 0 | x x 0 0 0 0 | x 0 0 | x x 0 0 0 0 | x x 0 0 0 0 | x2 x3 0 0 0 0 | x3 0 0
d28 | 0 0 0 0 | 0 0 0 0 x x | 0 x 0 | x x 0 0 x x | 0 0 x x 0 0 | 0 0 x3 x2 0 0 | 0 x3 0
d29 | 0 0 0 0 | x x 0 0 0 0 | 0 x 0 | x x 0 0 0 0 | 0 0 x x 0 0 | 0 0 x2 x3 0 0 | 0 x3 0
d30 | 0 0 0 0 | 0 0 0 0 x x | 0 0 x | 0 0 0 0 x x | 0 0 0 0 x x | 0 0 0 0 x3 x2 | 0 0 x3
d31 | 0 0 0 0 | 0 0 x x 0 0 | 0 0 x | 0 0 x x 0 0 | 0 0 0 0 x x | 0 0 0 0 x2 x3 | 0 0 x3
d32 | 1 1 1 1 | x x x x 0 0 | x 0 0 | x2 x2 x2 x2 0 0 | x2 x2 0 0 0 0 | x3 x3 0 0 0 0 | x4 0 0
d33 | 1 1 1 1 | x x 0 0 x x | 0 x 0 | x2 x2 0 0 x2 x2 | 0 0 x2 x2 0 0 | 0 0 x3 x3 0 0 | 0 x4 0
d34 | 1 1 1 1 | 0 0 x x x x | 0 0 x | 0 0 x2 x2 x2 x2 | 0 0 0 0 x2 x2 | 0 0 0 0 x3 x3 | 0 0 x4
"""

TOKEN = {"0": None, "1": 0, "x": 1, "x2": 2, "x3": 3, "x4": 4}

# cell layout of the printed table: alpha label, (r1, r2), size
CELLS = [
    ["a1", [0, 0], 4],
    ["a2", [0, 1], 6],
    ["a3", [0, 1], 3],
    ["a4", [1, 0], 6],
    ["a5", [1, 0], 6],
    ["a6", [1, 1], 6],
    ["a7", [2, 0], 3],
]

# -- reduced 9x9 block, rows d26..d34; ascending coefficient lists -------------
D3 = [0, -3, 0, 1]            # x^3 - 3x
D4 = [8, 5, -4, -2, 1]        # x^4 - 2x^3 - 4x^2 + 5x + 8
A = [0, -1, 1]                # x^2 - x
NA = [0, 1, -1]               # -x^2 + x
B2 = [0, -2]                  # -2x
C = [8, 2, -2]                # -2x^2 + 2x + 8
Z = []
RHO = [
    [D3, A, Z, Z, Z, B2, NA, Z, Z],
    [A, D3, Z, B2, Z, Z, NA, Z, Z],
    [Z, Z, D3, A, B2, Z, Z, NA, Z],
    [Z, B2, A, D3, Z, Z, Z, NA, Z],
    [Z, Z, B2, Z, D3, A, Z, Z, NA],
    [B2, Z, Z, Z, A, D3, Z, Z, NA],
    [NA, NA, Z, Z, Z, Z, D4, C, C],
    [Z, Z, NA, NA, Z, Z, C, D4, C],
    [Z, Z, Z, Z, NA, NA, C, C, D4],
]

# -- symbolic coarser-count table; cells are {(e1, e2): coeff} over s1, s2 ----
LABELS = [[1, 2], [2, 0], [0, 3], [1, 1], [1, 0], [0, 2], [0, 1], [0, 0]]
TABLE = {
    (1, 2): {
        (1, 2): {(0, 0): 1}, (2, 0): {}, (0, 3): {(0, 0): 1},
        (1, 1): {(0, 1): 2}, (1, 0): {(0, 2): 1},
        (0, 2): {(1, 0): 2, (0, 1): 3, (0, 0): 3},
        (0, 1): {(1, 1): 4, (0, 2): 3, (1, 0): 2, (0, 1): 3, (0, 0): 1},
        (0, 0): {(1, 2): 2, (0, 3): 1},
    },
    (2, 0): {
        (1, 2): {}, (2, 0): {(0, 0): 1}, (0, 3): {},
        (1, 1): {(0, 0): 2}, (1, 0): {(1, 0): 4, (0, 1): 2, (0, 0): 2},
        (0, 2): {(0, 0): 1}, (0, 1): {(1, 0): 4, (0, 1): 2, (0, 0): 1},
        (0, 0): {(2, 0): 4, (1, 1): 4, (0, 2): 1},
    },
    (0, 3): {
        (1, 2): {}, (2, 0): {}, (0, 3): {(0, 0): 1}, (1, 1): {}, (1, 0): {},
        (0, 2): {(0, 1): 3, (0, 0): 3},
        (0, 1): {(0, 2): 3, (0, 1): 3, (0, 0): 1},
        (0, 0): {(0, 3): 1},
    },
    (1, 1): {
        (1, 2): {}, (2, 0): {}, (0, 3): {}, (1, 1): {(0, 0): 1},
        (1, 0): {(0, 1): 1}, (0, 2): {(0, 0): 1},
        (0, 1): {(1, 0): 2, (0, 1): 2, (0, 0): 1},
        (0, 0): {(1, 1): 2, (0, 2): 1},
    },
    (1, 0): {
        (1, 2): {}, (2, 0): {}, (0, 3): {}, (1, 1): {}, (1, 0): {(0, 0): 1},
        (0, 2): {}, (0, 1): {(0, 0): 1}, (0, 0): {(1, 0): 2, (0, 1): 1},
    },
    (0, 2): {
        (1, 2): {}, (2, 0): {}, (0, 3): {}, (1, 1): {}, (1, 0): {},
        (0, 2): {(0, 0): 1}, (0, 1): {(0, 1): 2, (0, 0): 1}, (0, 0): {(0, 2): 1},
    },
    (0, 1): {
        (1, 2): {}, (2, 0): {}, (0, 3): {}, (1, 1): {}, (1, 0): {},
        (0, 2): {}, (0, 1): {(0, 0): 1}, (0, 0): {(0, 1): 1},
    },
    # the all-zero row of the printed table is left implicit there
    (0, 0): {
        (1, 2): {}, (2, 0): {}, (0, 3): {}, (1, 1): {}, (1, 0): {},
        (0, 2): {}, (0, 1): {}, (0, 0): {(0, 0): 1},
    },
}


def parse_raw():
    rows = []
    for line in RAW.strip().splitlines():
        _, data = line.split("|", 1)
        tokens = data.replace("|", " ").split()
        rows.append([TOKEN[t] for t in tokens])
    assert len(rows) == 34 and all(len(r) == 34 for r in rows)
    # the published table itself is not perfectly symmetric; keep the printed
    # values verbatim and record the offending positions for the matcher
    asymmetric = [
        [i, j, rows[i][j], rows[j][i]]
        for i in range(34)
        for j in range(i + 1, 34)
        if rows[i][j] != rows[j][i]
    ]
    # the published table contradicts its own symmetry at exactly these four
    # positions, all in the size-12-by-size-6 rectangle
    expected = [[13, 27], [13, 29], [14, 27], [14, 29]]
    assert [[i, j] for i, j, _, _ in asymmetric] == expected, asymmetric
    start = 0
    for _, (r1, r2), size in CELLS:
        for i in range(start, start + size):
            assert rows[i][i] == 2 * r1 + r2, f"diagonal degree at {i}"
        start += size
    assert start == 34
    return rows, asymmetric


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rows, asymmetric = parse_raw()
    (OUT / "published_gram.json").write_text(
        json.dumps(
            {
                "description": "published 34x34 Gram matrix, signed family, k=3, profile (1, 0);"
                " entries are monomial exponents, null = zero polynomial",
                "cells": CELLS,
                "asymmetric_positions": asymmetric,
                "exponents": rows,
            },
            indent=1,
        )
        + "\n"
    )
    for row in RHO:
        assert len(row) == 9
    (OUT / "published_reduced.json").write_text(
        json.dumps(
            {
                "description": "published reduced blocks at the same parameters: three scalar"
                " blocks and the separately reduced 9x9 tail block (ascending coefficients)",
                "scalar_blocks": [
                    {"r1": 0, "r2": 0, "size": 4, "diagonal": [1], "offdiag": []},
                    {"r1": 0, "r2": 1, "size": 9, "diagonal": [0, 1], "offdiag": []},
                    {"r1": 1, "r2": 0, "size": 12, "diagonal": [-2, -1, 1], "offdiag": [-2]},
                ],
                "rho_cells": [[1, 1, 6], [2, 0, 3]],
                "rho_block": RHO,
            },
            indent=1,
        )
        + "\n"
    )
    (OUT / "stirling_table.json").write_text(
        json.dumps(
            {
                "description": "published symbolic coarser-count table; rows and columns are"
                " labelled by (paired, fixed) edge counts, cells are sparse"
                " {\"e1,e2\": coeff} monomial dicts in the two through counts;"
                " the all-but-diagonal-zero last row is implicit in the source",
                "labels": LABELS,
                "cells": {
                    f"{r[0]},{r[1]}|{p[0]},{p[1]}": {f"{a},{b}": c for (a, b), c in cell.items()}
                    for r, row in TABLE.items()
                    for p, cell in row.items()
                },
                "implicit_rows": [[0, 0]],
            },
            indent=1,
        )
        + "\n"
    )
    print("fixtures written to", OUT)


if __name__ == "__main__":
    main()
