#!/usr/bin/env python3
"""Builds PD codes for the bundled knot table from standard descriptions.

Three independent routes are supported:

  braid   closure of a braid word, e.g. "1 1 -2 1 -2 1 -2 -2"
  dt      signed Dowker-Thistlethwaite code; the planar embedding is found by
          trying every crossing handedness and keeping one with n + 2 faces
  grid    grid diagram given as the X and O rows of each column (vertical
          segments cross over horizontal ones); --reduce N walks over grid
          moves and Reidemeister I/II/III moves until at most N crossings
          remain

--start K renumbers the output so that edge K+1 becomes edge 1.

All routes emit PD terms X[a,b,c,d] with edges numbered along the knot and
labels listed counterclockwise from the incoming under-edge.
"""

import argparse
import collections
import itertools
import random
import re
import sys


def _renumber(crossings, next_seg):
    """Relabels raw segment ids 1..2n along the traversal."""
    start = min(next_seg)
    order = [start]
    while True:
        nxt = next_seg[order[-1]]
        if nxt == start:
            break
        order.append(nxt)
    if len(order) != len(next_seg):
        raise ValueError("description has more than one component")
    label = {seg: k + 1 for k, seg in enumerate(order)}
    return [tuple(label[s] for s in x) for x in crossings]


def _pd_from_passes(passes):
    """passes: list over the traversal of (crossing id, is_over, (dx, dy)).

    Edge k runs from pass k to pass k+1 (cyclically); the edge entering pass
    k is k-1.
    """
    m = len(passes)
    by_crossing = {}
    for k, (cid, over, d) in enumerate(passes):
        by_crossing.setdefault(cid, {})[over] = (k, d)
    def edge_in(k):
        return (k - 1) % m + 1
    def edge_out(k):
        return k % m + 1
    out = []
    for cid in sorted(by_crossing):
        u_k, u_d = by_crossing[cid][False]
        o_k, o_d = by_crossing[cid][True]
        # counterclockwise rotation of -u_d by 90 degrees
        back = (-u_d[0], -u_d[1])
        ccw = (-back[1], back[0])
        if ccw == (-o_d[0], -o_d[1]):
            b, d = edge_in(o_k), edge_out(o_k)
        else:
            b, d = edge_out(o_k), edge_in(o_k)
        out.append((edge_in(u_k), b, edge_out(u_k), d))
    return out


def from_grid(xs, os):
    """xs[c], os[c]: rows of the two markings in column c."""
    n = len(xs)
    col_of_x_in_row = {xs[c]: c for c in range(n)}
    # traverse: vertical from X to O in a column, horizontal from O to X in a row
    segments = []  # (kind, fixed, start, end)
    c = 0
    while True:
        segments.append(("v", c, xs[c], os[c]))
        r = os[c]
        c2 = col_of_x_in_row[r]
        segments.append(("h", r, c, c2))
        c = c2
        if c == 0:
            break
    if len(segments) != 2 * n:
        raise ValueError("grid describes a link, not a knot")
    verticals = [s for s in segments if s[0] == "v"]
    horizontals = [s for s in segments if s[0] == "h"]

    def inside(v, lo, hi):
        return min(lo, hi) < v < max(lo, hi)

    crossing_id = {}
    for v in verticals:
        for h in horizontals:
            if inside(v[1], h[2], h[3]) and inside(h[1], v[2], v[3]):
                crossing_id[(v[1], h[1])] = len(crossing_id)

    passes = []
    for kind, fixed, a, b in segments:
        step = 1 if b > a else -1
        hits = []
        for (col, row), cid in crossing_id.items():
            if kind == "v" and col == fixed and inside(row, a, b):
                hits.append((row, cid))
            if kind == "h" and row == fixed and inside(col, a, b):
                hits.append((col, cid))
        hits.sort(reverse=step < 0)
        d = (0, step) if kind == "v" else (step, 0)
        for _, cid in hits:
            passes.append((cid, kind == "v", d))
    return _pd_from_passes(passes)


def from_braid(word, strands=None):
    """Closure of a braid word; generator i > 0 crosses positions i, i+1 with
    the left strand over, -i with the right strand over."""
    if strands is None:
        strands = max(abs(g) for g in word) + 1
    seg = 0
    cur = []
    first = []
    for _ in range(strands):
        seg += 1
        cur.append(seg)
        first.append(seg)
    raw = []
    for g in word:
        i = abs(g) - 1
        bl, br = cur[i], cur[i + 1]
        seg += 1
        tl = seg
        seg += 1
        tr = seg
        # BL -> TR and BR -> TL; counterclockwise order BL, BR, TR, TL
        if g > 0:   # BL strand over: under runs BR -> TL
            raw.append((br, tr, tl, bl))
        else:       # BR strand over: under runs BL -> TR
            raw.append((bl, br, tr, tl))
        cur[i], cur[i + 1] = tl, tr
    # closure: top segment at position j continues as the bottom one
    alias = {cur[j]: first[j] for j in range(strands)}
    def canon(s):
        return alias.get(s, s)
    raw = [tuple(canon(s) for s in x) for x in raw]
    next_seg = {}
    for g, (a, b, c, d) in zip(word, raw):
        next_seg[a] = c
        if g > 0:
            next_seg[d] = b   # over strand BL -> TR
        else:
            next_seg[b] = d   # over strand BR -> TL
    return _renumber(raw, next_seg)


def from_dt(code):
    """Signed DT code: crossing k pairs pass 2k-1 with pass |code[k]|; a
    negative entry puts the even pass over."""
    n = len(code)
    m = 2 * n
    partner = {}
    even_over = {}
    for k, e in enumerate(code):
        o = 2 * k + 1
        partner[o], partner[abs(e)] = abs(e), o
        even_over[o] = e < 0
    crossing_of = {}
    for k in range(n):
        crossing_of[2 * k + 1] = k
        crossing_of[abs(code[k])] = k
    odd_pass = {k: 2 * k + 1 for k in range(n)}
    even_pass = {k: abs(code[k]) for k in range(n)}

    def half_edges(k, flip):
        # half-edge = (pass, 'in' | 'out'); counterclockwise rotation
        p, q = odd_pass[k], even_pass[k]
        if flip:
            return [(p, "in"), (q, "in"), (p, "out"), (q, "out")]
        return [(p, "in"), (q, "out"), (p, "out"), (q, "in")]

    def mate(h):
        p, io = h
        if io == "out":
            return (p % m + 1, "in")
        return ((p - 2) % m + 1, "out")

    for flips in itertools.product([False, True], repeat=n - 1):
        flips = (False,) + flips
        rot = {}
        for k in range(n):
            hs = half_edges(k, flips[k])
            for i, h in enumerate(hs):
                rot[h] = hs[(i + 1) % 4]
        seen = set()
        faces = 0
        for h0 in rot:
            if h0 in seen:
                continue
            faces += 1
            h = h0
            while h not in seen:
                seen.add(h)
                h = rot[mate(h)]
        if faces != n + 2:
            continue
        out = []
        for k in range(n):
            hs = half_edges(k, flips[k])
            p, q = odd_pass[k], even_pass[k]
            under = q if even_over[p] is False else p
            start = hs.index((under, "in"))
            cyc = hs[start:] + hs[:start]
            def edge(h):
                pas, io = h
                return (pas - 2) % m + 1 if io == "in" else pas
            out.append(tuple(edge(h) for h in cyc))
        return out
    raise ValueError("no planar realization found")


def parse_pd(text):
    return [tuple(map(int, m)) for m in re.findall(r"X\[(\d+),(\d+),(\d+),(\d+)\]", text)]


def rotate_labels(crossings, k):
    m = 2 * len(crossings)
    return [tuple((e - 1 - k) % m + 1 for e in x) for x in crossings]


def to_gauss(crossings):
    """Sequence of (crossing id, is_over) along the knot."""
    m = 2 * len(crossings)
    code = [None] * m
    for cid, (a, b, c, d) in enumerate(crossings):
        code[a - 1] = (cid, False)
        over_in = d if d % m + 1 == b else b
        code[over_in - 1] = (cid, True)
    return code


def _gauss_key(code):
    best = None
    for r in range(len(code)):
        rot = code[r:] + code[:r]
        ids = {}
        key = tuple((ids.setdefault(cid, len(ids)), o) for cid, o in rot)
        if best is None or key < best:
            best = key
    return best


def from_gauss(code):
    """Planar realization of a Gauss code via its DT code, or None."""
    passes = collections.defaultdict(list)
    for i, (cid, over) in enumerate(code):
        passes[cid].append((i + 1, over))
    dt = {}
    for (i, oi), (j, oj) in passes.values():
        if (i + j) % 2 == 0:
            return None
        odd, even, even_over = (i, j, oj) if i % 2 else (j, i, oi)
        dt[odd] = -even if even_over else even
    try:
        return from_dt([dt[2 * k + 1] for k in range(len(dt))])
    except ValueError:
        return None


def _moves(code):
    n = len(code)
    adj = [(i, (i + 1) % n) for i in range(n)]
    for i, j in adj:
        if code[i][0] == code[j][0]:
            yield "R1", [c for k, c in enumerate(code) if k not in (i, j)]
    for i, j in adj:
        if code[i][0] == code[j][0] or code[i][1] != code[j][1]:
            continue
        pair = {code[i][0], code[j][0]}
        for k, l in adj:
            if {code[k][0], code[l][0]} == pair and code[k][1] == code[l][1] != code[i][1]:
                yield "R2", [c for c in code if c[0] not in pair]
    by_pair = collections.defaultdict(list)
    for i, j in adj:
        if code[i][0] != code[j][0]:
            by_pair[frozenset((code[i][0], code[j][0]))].append((i, j))
    ids = sorted({cid for cid, _ in code})
    for x, y, z in itertools.combinations(ids, 3):
        for s1 in by_pair[frozenset((x, y))]:
            for s2 in by_pair[frozenset((y, z))]:
                for s3 in by_pair[frozenset((x, z))]:
                    strands = (s1, s2, s3)
                    if len({p for s in strands for p in s}) != 6:
                        continue
                    # some strand must pass over both of its crossings
                    if not any(code[i][1] and code[j][1] for i, j in strands):
                        continue
                    new = list(code)
                    for i, j in strands:
                        new[i], new[j] = code[j], code[i]
                    yield "R3", new


def reidemeister_reduce(crossings, target, limit=200000):
    """Breadth-first search over planar R3 moves for an R1/R2 reduction."""
    start = to_gauss(crossings)
    seen = {_gauss_key(start)}
    queue = collections.deque([start])
    while queue and len(seen) < limit:
        code = queue.popleft()
        for kind, new in _moves(code):
            key = _gauss_key(new)
            if key in seen:
                continue
            seen.add(key)
            pd = from_gauss(new)
            if pd is None:
                continue
            if len(pd) <= target:
                return pd
            if kind == "R3":
                queue.append(new)
    return None


def _grid_neighbor(xs, os, rng):
    n = len(xs)
    kind, i = rng.randrange(4), rng.randrange(n)
    if kind == 0:
        return xs[1:] + xs[:1], os[1:] + os[:1]
    if kind == 1:
        return [(x + 1) % n for x in xs], [(o + 1) % n for o in os]
    transposed = kind == 3
    if transposed:
        xs, os = _transpose(xs, os)
    j = (i + 1) % n
    a, b = sorted((xs[i], os[i])), sorted((xs[j], os[j]))
    if a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1] or len({*a, *b}) < 4:
        return None
    xs, os = list(xs), list(os)
    xs[i], xs[j], os[i], os[j] = xs[j], xs[i], os[j], os[i]
    return _transpose(xs, os) if transposed else (xs, os)


def _transpose(xs, os):
    tx, to = [0] * len(xs), [0] * len(os)
    for c in range(len(xs)):
        tx[xs[c]], to[os[c]] = c, c
    return tx, to


def reduce_grid(xs, os, target, seed=1, steps=20000):
    """Walks over grid moves; each projection is tried with reidemeister_reduce."""
    rng = random.Random(seed)
    cur, tried = (xs, os), set()
    pd = from_grid(xs, os)
    for _ in range(steps):
        if len(pd) <= target:
            return pd
        key = _gauss_key(to_gauss(pd))
        if key not in tried:
            tried.add(key)
            reduced = reidemeister_reduce(pd, target)
            if reduced is not None:
                return reduced
        nxt = None
        while nxt is None:
            nxt = _grid_neighbor(*cur, rng)
        try:
            cand = from_grid(*nxt)
        except ValueError:
            continue
        if len(cand) <= target + 3:
            cur, pd = nxt, cand
    raise ValueError("no diagram with %d crossings found" % target)


def fmt(crossings):
    return " ".join("X[%d,%d,%d,%d]" % x for x in crossings)


def main(argv):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="kind", required=True)
    b = sub.add_parser("braid")
    b.add_argument("word", help="space-separated generators, e.g. '1 1 -2'")
    d = sub.add_parser("dt")
    d.add_argument("code", help="space-separated signed even numbers")
    g = sub.add_parser("grid")
    g.add_argument("xs", help="comma-separated X rows per column")
    g.add_argument("os", help="comma-separated O rows per column")
    g.add_argument("--reduce", type=int, help="target crossing number")
    g.add_argument("--seed", type=int, default=1)
    for p in (b, d, g):
        p.add_argument("--start", type=int, default=0, help="renumber from edge K+1")
    args = ap.parse_args(argv)
    if args.kind == "braid":
        pd = from_braid([int(t) for t in args.word.split()])
    elif args.kind == "dt":
        pd = from_dt([int(t) for t in args.code.split()])
    else:
        xs = [int(t) for t in args.xs.split(",")]
        os_ = [int(t) for t in args.os.split(",")]
        if args.reduce is None:
            pd = from_grid(xs, os_)
        else:
            pd = reduce_grid(xs, os_, args.reduce, args.seed)
    print(fmt(rotate_labels(pd, args.start)))


if __name__ == "__main__":
    main(sys.argv[1:])
