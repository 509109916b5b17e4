#!/usr/bin/env python3
"""Writes permutation generators for Sz(8) and Aut(U3(3)) as group files.

Sz(8) acts on the 65 points of the Tits ovoid in PG(3,8):
    {(1, x, y, xy + x^(s+2) + y^s)} + {(0,0,0,1)},  s: x -> x^4.
Aut(U3(3)) = PGammaU(3,3) acts on the 28 points of the Hermitian unital
x1 x3^3 + x2^4 + x3 x1^3 = 0 in PG(2,9).

Generators are the projective maps found by exhaustive search among
unitriangular, diagonal and antidiagonal matrices that preserve the point
set (plus the Frobenius map for the unital). Group orders are checked by
sympy while the generating sets are thinned out; the expected values are
29120 and 12096.
"""

import argparse
import itertools
import pathlib

from sympy.combinatorics import Permutation, PermutationGroup


class Field:
    """GF(p^k) given by a monic irreducible polynomial (low degree first)."""

    def __init__(self, p, poly):
        self.p, self.k, self.poly = p, len(poly) - 1, poly
        self.q = p ** self.k
        self.elems = list(range(self.q))
        self._mul = [[self._slow_mul(a, b) for b in self.elems] for a in self.elems]

    def _digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _num(self, ds):
        return sum(d * self.p ** i for i, d in enumerate(ds))

    def add(self, a, b):
        return self._num([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _slow_mul(self, a, b):
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for deg in range(len(prod) - 1, self.k - 1, -1):
            c = prod[deg]
            if c:
                for i, m in enumerate(self.poly):
                    prod[deg - self.k + i] = (prod[deg - self.k + i] - c * m) % self.p
        return self._num(prod[: self.k])

    def mul(self, a, b):
        return self._mul[a][b]

    def pow(self, a, n):
        r = 1
        for _ in range(n):
            r = self.mul(r, a)
        return r


def normalize(F, v):
    for c in v:
        if c:
            inv = next(x for x in F.elems if F.mul(x, c) == 1)
            return tuple(F.mul(inv, t) for t in v)
    raise ValueError("zero vector")


def apply(F, m, v):
    out = []
    for row in m:
        s = 0
        for a, b in zip(row, v):
            s = F.add(s, F.mul(a, b))
        out.append(s)
    return normalize(F, out)


def as_permutation(F, points, index, m, frob=None):
    images = []
    for pt in points:
        v = apply(F, m, pt)
        if frob is not None:
            v = normalize(F, tuple(F.pow(c, frob) for c in v))
        if v not in index:
            return None
        images.append(index[v])
    return images


def unitriangular(F, n, lower):
    slots = [(i, j) for i in range(n) for j in range(n) if (i > j if lower else i < j)]
    for vals in itertools.product(F.elems, repeat=len(slots)):
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(slots, vals):
            m[i][j] = v
        yield m


def diagonals(F, n):
    for vals in itertools.product(F.elems[1:], repeat=n - 1):
        m = [[0] * n for _ in range(n)]
        m[0][0] = 1
        for i, v in enumerate(vals):
            m[i + 1][i + 1] = v
        yield m


def antidiagonal(n):
    return [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)]


def collect(F, points, candidates, extra=()):
    index = {p: i for i, p in enumerate(points)}
    gens = []
    for m in candidates:
        perm = as_permutation(F, points, index, m)
        if perm is not None and perm != list(range(len(points))) and perm not in gens:
            gens.append(perm)
    for m, frob in extra:
        perm = as_permutation(F, points, index, m, frob)
        if perm is not None and perm not in gens:
            gens.append(perm)
    return gens


def cycles(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out)


def sz8():
    F = Field(2, [1, 1, 0, 1])  # x^3 + x + 1
    s = 4
    points = [(0, 0, 0, 1)]
    for x, y in itertools.product(F.elems, repeat=2):
        z = F.add(F.add(F.mul(x, y), F.pow(x, s + 2)), F.pow(y, s))
        points.append((1, x, y, z))
    cands = itertools.chain(unitriangular(F, 4, True), diagonals(F, 4), [antidiagonal(4)])
    return len(points), collect(F, points, cands)


def u33():
    F = Field(3, [1, 0, 1])  # x^2 + 1
    points = set()
    for v in itertools.product(F.elems, repeat=3):
        if not any(v):
            continue
        a = F.mul(v[0], F.pow(v[2], 3))
        b = F.pow(v[1], 4)
        c = F.mul(v[2], F.pow(v[0], 3))
        if F.add(F.add(a, b), c) == 0:
            points.add(normalize(F, v))
    points = sorted(points)
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    cands = itertools.chain(unitriangular(F, 3, False), diagonals(F, 3), [antidiagonal(3)])
    return len(points), collect(F, points, cands, extra=[(ident, 3)])


def thin(gens, order):
    """Greedy subset of generators that still generates a group of `order`."""
    chosen = []
    for g in gens:
        if chosen and PermutationGroup(chosen).contains(Permutation(g)):
            continue
        chosen.append(Permutation(g))
        if PermutationGroup(chosen).order() == order:
            return [list(c.array_form) for c in chosen]
    raise ValueError("generators only reach order %d" % PermutationGroup(chosen).order())


def write(path, title, degree, gens):
    lines = ["# " + title, "# generated by tools/make_groups.py", "degree %d" % degree]
    lines += [cycles(g) for g in gens]
    path.write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", type=pathlib.Path)
    args = ap.parse_args()
    n, gens = sz8()
    gens = thin(gens, 29120)
    write(args.outdir / "sz8.grp", "Suzuki group Sz(8) on the 65 points of the Tits ovoid", n, gens)
    n, gens = u33()
    gens = thin(gens, 12096)
    write(args.outdir / "autu33.grp", "Aut(U3(3)) on the 28 points of the Hermitian unital", n, gens)


if __name__ == "__main__":
    main()
