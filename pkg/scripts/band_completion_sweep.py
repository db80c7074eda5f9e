#!/usr/bin/env python3
"""Sweep banded Toeplitz partial matrices through the positive completion.

For each correlation r on the first off-diagonal, completes the band-1
partial matrix on n vertices and reports the filled entries (which decay
geometrically) together with the minimum eigenvalue of the completion.
"""

import argparse

import numpy as np

from posext import PartialHermitianMatrix, positive_completion, validate_pattern


def band1_toeplitz(n: int, r: float) -> PartialHermitianMatrix:
    p = validate_pattern(n, [(i, i + 1) for i in range(n - 1)])
    blocks = {(i, i): np.array([[1.0 + 0j]]) for i in range(n)}
    blocks.update({(i, i + 1): np.array([[r + 0j]]) for i in range(n - 1)})
    return PartialHermitianMatrix(p, 1, blocks)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--rs", default="0.1,0.3,0.5,0.7,0.9")
    args = ap.parse_args()

    for r in (float(x) for x in args.rs.split(",")):
        result = positive_completion(band1_toeplitz(args.n, r))
        row = result.matrix[0].real
        min_eig = np.linalg.eigvalsh(result.matrix).min()
        geom_gap = max(
            abs(result.matrix[i, j].real - r ** abs(i - j))
            for i in range(args.n)
            for j in range(args.n)
        )
        print(
            f"r={r:4.2f}  first row: {np.round(row, 6)}  "
            f"min eig {min_eig:+.3e}  geometric gap {geom_gap:.2e}"
        )


if __name__ == "__main__":
    main()
