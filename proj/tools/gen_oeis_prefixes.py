#!/usr/bin/env python3
"""Writes data/oeis/<id>.txt by direct enumeration, independent of the C++ library.

Each file holds the rows for n = 1..N, one row per line.
"""
import itertools
import math
import os
import sys

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "oeis")


def dyck_paths(n):
    for ups in itertools.combinations(range(2 * n), n):
        w = ["D"] * (2 * n)
        for i in ups:
            w[i] = "U"
        h = 0
        ok = True
        for c in w:
            h += 1 if c == "U" else -1
            if h < 0:
                ok = False
                break
        if ok:
            yield w


def peak_heights(w):
    h, out = 0, []
    for i, c in enumerate(w):
        h += 1 if c == "U" else -1
        if c == "U" and i + 1 < len(w) and w[i + 1] == "D":
            out.append(h)
    return out


def returns(w):
    h, r = 0, 0
    for c in w:
        h += 1 if c == "U" else -1
        r += h == 0
    return r


def catalan(nmax):
    return [[math.comb(2 * n, n) // (n + 1)] for n in range(1, nmax + 1)]


def narayana(nmax):
    rows = []
    for n in range(1, nmax + 1):
        counts = [0] * n
        for w in dyck_paths(n):
            counts[len(peak_heights(w)) - 1] += 1
        rows.append(counts)
    return rows


def returns_triangle(nmax):
    rows = []
    for n in range(1, nmax + 1):
        counts = [0] * n
        for w in dyck_paths(n):
            counts[returns(w) - 1] += 1
        rows.append(counts)
    return rows


def first_last_peak(nmax):
    rows = []
    for n in range(1, nmax + 1):
        counts = [0] * (2 * n - 1)
        for w in dyck_paths(n):
            p = peak_heights(w)
            counts[p[0] + p[-1] - 2] += 1
        rows.append(counts)
    return rows


def max_drop(nmax):
    rows = []
    for n in range(1, nmax + 1):
        counts = [0] * n
        for s in itertools.permutations(range(n)):
            counts[max(s[i] - i for i in range(n))] += 1
        rows.append(counts)
    return rows


def involutions(nmax):
    out = []
    for n in range(1, nmax + 1):
        out.append([sum(1 for s in itertools.permutations(range(n)) if all(s[s[i]] == i for i in range(n)))])
    return out


def eulerian(nmax):
    rows = []
    for n in range(1, nmax + 1):
        counts = [0] * n
        for s in itertools.permutations(range(n)):
            counts[sum(s[i] > s[i + 1] for i in range(n - 1))] += 1
        rows.append(counts)
    return rows


TABLES = {
    "A000108": ("Catalan numbers", catalan, 15),
    "A001263": ("Narayana triangle", narayana, 10),
    "A033184": ("Dyck paths by number of returns", returns_triangle, 10),
    "A114503": ("Dyck paths by first plus last peak height, k >= 2", first_last_peak, 10),
    "A056151": ("permutations by max(s_i - i)", max_drop, 8),
    "A000085": ("involutions", involutions, 9),
    "A008292": ("Eulerian triangle", eulerian, 8),
}


def main():
    os.makedirs(OUT, exist_ok=True)
    for oid, (title, fn, nmax) in TABLES.items():
        with open(os.path.join(OUT, oid + ".txt"), "w") as f:
            f.write(f"# {oid} {title}, rows n = 1..{nmax}\n")
            for row in fn(nmax):
                f.write(" ".join(map(str, row)) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
