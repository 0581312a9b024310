#!/usr/bin/env python3
"""Build a census of connected rho-regular graphs of order n as graph6 lines.

The census is the closure of one connected rho-regular graph under
connectivity-preserving double-edge switches (ab, cd -> ac, bd), which reaches
every connected realization of a degree sequence (Taylor, 1981). Isomorphism
classes are identified with nauty certificates via pynauty. Output lines are
canonically labelled graph6 strings, sorted.

Usage: gen_regular_catalogue.py RHO N [--out FILE]
"""
import argparse
import sys

import networkx as nx
import pynauty


def to_pynauty(g, n):
    return pynauty.Graph(n, adjacency_dict={v: list(g.neighbors(v)) for v in range(n)})


def canonical(g, n):
    pg = to_pynauty(g, n)
    cert = pynauty.certificate(pg)
    return cert, pg


def canonical_graph6(g, n):
    pg = to_pynauty(g, n)
    lab = pynauty.canon_label(pg)
    inv = {old: new for new, old in enumerate(lab)}
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from((inv[u], inv[v]) for u, v in g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def seed(rho, n):
    g = nx.circulant_graph(n, list(range(1, rho // 2 + 1)))
    if rho % 2 == 1:
        g.add_edges_from((i, i + n // 2) for i in range(n // 2))
    return g


def census(rho, n):
    if rho >= n or (rho * n) % 2:
        return []
    start = seed(rho, n)
    assert all(d == rho for _, d in start.degree()) and nx.is_connected(start)
    seen = {canonical(start, n)[0]: start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            edges = list(g.edges())
            for i in range(len(edges)):
                a, b = edges[i]
                for j in range(i + 1, len(edges)):
                    c, d = edges[j]
                    for (x, y) in ((c, d), (d, c)):
                        # ab, xy -> ax, by
                        if len({a, b, x, y}) < 4:
                            continue
                        if g.has_edge(a, x) or g.has_edge(b, y):
                            continue
                        h = g.copy()
                        h.remove_edge(a, b)
                        h.remove_edge(x, y)
                        h.add_edge(a, x)
                        h.add_edge(b, y)
                        if not nx.is_connected(h):
                            continue
                        cert = canonical(h, n)[0]
                        if cert not in seen:
                            seen[cert] = h
                            nxt.append(h)
        frontier = nxt
    return sorted(canonical_graph6(g, n) for g in seen.values())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("rho", type=int)
    ap.add_argument("n", type=int)
    ap.add_argument("--out")
    args = ap.parse_args()
    lines = census(args.rho, args.n)
    text = "".join(line + "\n" for line in lines)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    print(f"rho={args.rho} n={args.n}: {len(lines)} graphs", file=sys.stderr)


if __name__ == "__main__":
    main()
