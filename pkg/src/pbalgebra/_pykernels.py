"""Pure-Python versions of the compiled kernels (used when the extension is absent)."""

import numpy as np


def assoc_violations(ptr, ks, vals, n, limit):
    ptr = [int(x) for x in ptr]
    ks = [int(x) for x in ks]
    vals = [int(x) for x in vals]
    rows = [
        list(zip(ks[ptr[r]:ptr[r + 1]], vals[ptr[r]:ptr[r + 1]]))
        for r in range(n * n)
    ]
    count = 0
    found = []
    for i in range(n):
        for j in range(n):
            ij = rows[i * n + j]
            for l in range(n):
                diff = {}
                for k, g in ij:
                    for m, h in rows[k * n + l]:
                        diff[m] = diff.get(m, 0) + g * h
                for p, g in rows[j * n + l]:
                    for m, h in rows[i * n + p]:
                        diff[m] = diff.get(m, 0) - g * h
                if any(diff.values()):
                    if count < limit:
                        found.append((i, j, l))
                    count += 1
    return count, found


def bilinear(ti, tj, tk, vals, x, y, n):
    return np.bincount(tk, weights=vals * x[ti] * y[tj], minlength=n).astype(np.float64)
