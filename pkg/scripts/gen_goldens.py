#!/usr/bin/env python3
"""Regenerate the golden files under tests/golden.

Both goldens are computed here from first principles with scipy primitives
only (quadrature for the bound table, a dense betainc grid for the region
map).  The package code is deliberately not imported: the tests that compare
package output against these files are then a genuine two-route check.

Run from the repository root:

    python3 scripts/gen_goldens.py
"""

import math
import pathlib

import numpy as np
from scipy import integrate, special

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def transformed_mean(i: int, n: int, quantile) -> float:
    def integrand(u):
        return quantile(u) * np.exp(
            (i - 1) * np.log(u) + (n - i) * np.log1p(-u) - special.betaln(i, n - i + 1)
        )

    val, _ = integrate.quad(integrand, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=300)
    return val


def bound_table_rows(n: int):
    rows = []
    # log-logistic x/(1+x): mean diverges at i = n, bound tends to 1
    ll = []
    for i in range(1, n + 1):
        if i == n:
            ll.append(1.0)
        else:
            v = transformed_mean(i, n, lambda u: u / (1.0 - u))
            ll.append(v / (1.0 + v))
    rows.append(("LL", ll))
    rows.append(
        ("E", [1.0 - math.exp(-transformed_mean(i, n, lambda u: -np.log1p(-u)))
               for i in range(1, n + 1)])
    )
    rows.append(("U", [transformed_mean(i, n, lambda u: u) for i in range(1, n + 1)]))
    rows.append(
        ("E-", [math.exp(transformed_mean(i, n, np.log)) for i in range(1, n + 1)])
    )
    return rows


def write_table(n: int = 10) -> None:
    lines = ["G," + ",".join(str(i) for i in range(1, n + 1))]
    for label, values in bound_table_rows(n):
        lines.append(label + "," + ",".join(f"{v:.3f}" for v in values))
    out = GOLDEN / f"table1_n{n}.csv"
    out.write_text("\n".join(lines) + "\n", newline="\n")
    print(f"wrote {out}")


def region_cells(n: int, m: int):
    xs = np.linspace(0.0, 1.0, 20001)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if i > j:
                yield i, j, "HoldsSS_ij"
            elif n - i > m - j:
                yield i, j, "HoldsSS_ji"
            elif i * (m + 1) - j * (n + 1) < 0:
                yield i, j, "NoComparability"
            else:
                z = (
                    i / (n + 1.0) * (1.0 - special.betainc(i + 1, n - i + 1, xs))
                    - j / (m + 1.0) * (1.0 - special.betainc(j + 1, m - j + 1, xs))
                )
                zmin = float(z.min())
                yield i, j, ("NeedsCheck_Pass" if zmin >= -1e-9 else "NeedsCheck_Fail")


def write_region(n: int = 20, m: int = 30) -> None:
    lines = ["i,j,class"]
    fails = []
    margins = []
    for i, j, label in region_cells(n, m):
        lines.append(f"{i},{j},{label}")
        if label == "NeedsCheck_Fail":
            fails.append((i, j))
    out = GOLDEN / f"region_dda_{n}_{m}.csv"
    out.write_text("\n".join(lines) + "\n", newline="\n")
    print(f"wrote {out}; NeedsCheck_Fail cells: {fails}")


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    write_table(10)
    write_region(20, 30)
