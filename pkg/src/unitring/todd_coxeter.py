"""Coset enumeration over the trivial subgroup (HLT strategy with lookahead-free scanning).

Used only to verify that a presentation defines a group of the expected order.
"""

from __future__ import annotations

from .errors import Exhausted
from .fpgrp import FpGroup


def _expand(P: FpGroup) -> list[list[int]]:
    """Relators as lists of columns: generator g is column 2(g-1), its inverse 2(g-1)+1."""
    out = []
    for r in P.relators:
        letters = []
        for g, e in r:
            col = 2 * (g - 1) + (0 if e > 0 else 1)
            letters.extend([col] * abs(e))
        if letters:
            out.append(letters)
    return out


def enumerate_cosets(P: FpGroup, max_cosets: int = 200_000) -> int:
    """Order of the group presented by P, or Exhausted when more than max_cosets are alive."""
    ncols = 2 * P.ngens
    if ncols == 0:
        return 1
    rels = _expand(P)
    # cyclic conjugates are not needed: each relator is scanned at every coset
    table: list[list[int]] = [[-1] * ncols]
    parent = [0]
    live = 1

    def rep(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c: int, x: int) -> int:
        nonlocal live
        if live >= max_cosets:
            raise Exhausted(f"coset table exceeded {max_cosets} live cosets")
        n = len(table)
        table.append([-1] * ncols)
        parent.append(n)
        table[c][x] = n
        table[n][x ^ 1] = c
        live += 1
        return n

    def coincidence(a: int, b: int):
        queue = []

        def merge(k, l):
            nonlocal live
            k, l = rep(k), rep(l)
            if k != l:
                lo, hi = min(k, l), max(k, l)
                parent[hi] = lo
                queue.append(hi)
                live -= 1

        merge(a, b)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(ncols):
                d = row[x]
                if d < 0:
                    continue
                if table[d][x ^ 1] == g:
                    table[d][x ^ 1] = -1
                mu, nu = rep(g), rep(d)
                if table[mu][x] >= 0:
                    merge(nu, table[mu][x])
                elif table[nu][x ^ 1] >= 0:
                    merge(mu, table[nu][x ^ 1])
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(alpha: int, w: list[int]):
        f = b = alpha
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != alpha:
                    coincidence(f, alpha)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    c = 0
    while c < len(table):
        if parent[c] == c:
            for w in rels:
                scan_and_fill(c, w)
                if parent[c] != c:
                    break
            if parent[c] == c:
                for x in range(ncols):
                    if parent[c] != c:
                        break
                    if table[c][x] < 0:
                        define(c, x)
        c += 1
    return sum(1 for k in range(len(table)) if parent[k] == k)
