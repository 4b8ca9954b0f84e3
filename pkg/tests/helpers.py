"""Shared oracles and random generators for the test suite.

Oracles here are deliberately independent of the code paths they check:
BFS over representation matrices for lengths and group orders, the spherical
triangle-group order formula for expected sizes, and a braid-relation
rewriting closure for positive-word equality in rank 2.
"""

from __future__ import annotations

import random
from fractions import Fraction

from artincenter.coxeter import CoxeterElement, identity, simple_reflection, theta
from artincenter.dihedral import dihedral_equal
from artincenter.graph import INF, DefiningGraph, make_graph
from artincenter.words import ArtinWord, abelianize


def bfs_enumerate(g: DefiningGraph, limit: int = 10000) -> dict[CoxeterElement, int]:
    """All elements of a finite Coxeter group with their BFS distances from 1."""
    start = identity(g)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        new = []
        for w in frontier:
            for v in g.vertices:
                u = w * simple_reflection(g, v)
                if u not in dist:
                    if len(dist) >= limit:
                        raise RuntimeError("BFS limit exceeded; group is too large")
                    dist[u] = dist[w] + 1
                    new.append(u)
        frontier = new
    return dist


def expected_finite_order(g: DefiningGraph) -> int:
    """Classification-free order of a finite rank <= 3 Coxeter group.

    Rank 2 is dihedral of order 2m; rank 3 is a spherical triangle group of
    order 4 / (1/p + 1/q + 1/r - 1).
    """
    n = len(g.vertices)
    if n == 0:
        return 1
    if n == 1:
        return 2
    if n == 2:
        m = g.label(g.vertices[0], g.vertices[1])
        assert m != INF
        return 2 * int(m)
    if n == 3:
        a, b, c = g.vertices
        p, q, r = g.label(a, b), g.label(a, c), g.label(b, c)
        assert INF not in (p, q, r)
        excess = Fraction(1, int(p)) + Fraction(1, int(q)) + Fraction(1, int(r)) - 1
        assert excess > 0
        order = 4 / excess
        assert order.denominator == 1
        return int(order)
    raise ValueError("only rank <= 3 supported")


def dihedral_rewrite_closure(m: int, letters: tuple[str, ...]) -> set[tuple[str, ...]]:
    """All positive words reachable from the given one by single applications
    of the length-m braid relation to contiguous segments."""
    side_s = tuple("st"[i % 2] for i in range(m))
    side_t = tuple("ts"[i % 2] for i in range(m))
    seen = {letters}
    queue = [letters]
    while queue:
        w = queue.pop()
        for i in range(len(w) - m + 1):
            seg = w[i : i + m]
            if seg == side_s:
                new = w[:i] + side_t + w[i + m :]
            elif seg == side_t:
                new = w[:i] + side_s + w[i + m :]
            else:
                continue
            if new not in seen:
                seen.add(new)
                queue.append(new)
    return seen


def positive_words_equal_oracle(m: int, a: ArtinWord, b: ArtinWord) -> bool:
    """Rewriting-search equality for positive rank-2 words (lengths <= 12)."""
    assert a.is_positive() and b.is_positive()
    la = tuple(v for v, _ in a.letters)
    lb = tuple(v for v, _ in b.letters)
    if len(la) != len(lb):
        return False
    return lb in dihedral_rewrite_closure(m, la)


def group_abelianization(sub: DefiningGraph, w: ArtinWord) -> dict[str, int]:
    """Exponent sums in the abelianized Artin group: generators joined by an
    odd label coincide there, so sums are taken per odd-label component."""
    comp = {v: v for v in sub.vertices}

    def find(v):
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    for i, j, m in sub.edges:
        if m % 2 == 1:
            comp[find(sub.vertices[i])] = find(sub.vertices[j])
    sums: dict[str, int] = {find(v): 0 for v in sub.vertices}
    for v, k in abelianize(sub, w).items():
        sums[find(v)] += k
    return sums


def words_equal_in_subgroup(sub: DefiningGraph, a: ArtinWord, b: ArtinWord) -> bool:
    """Equality of two words in the Artin group of a subset graph.

    Exact for at most two vertices (abelianization in rank 1, the Garside or
    free-reduction oracle in rank 2); for larger subsets this is the pair of
    necessary conditions: equal Coxeter images and equal images in the
    abelianized group.
    """
    n = len(sub.vertices)
    if n == 0:
        return len(a) == 0 and len(b) == 0
    if n == 1:
        return sum(e for _, e in a) == sum(e for _, e in b)
    if n == 2:
        gens = (sub.vertices[0], sub.vertices[1])
        return dihedral_equal(sub.label(*gens), a, b, gens)
    return theta(sub, a) == theta(sub, b) and group_abelianization(
        sub, a
    ) == group_abelianization(sub, b)


# -- random generators ---------------------------------------------------------


_NAMES = "abcdefghijklmnop"


def random_graph(
    rng: random.Random,
    n: int,
    labels: tuple = (2, 3, INF),
) -> DefiningGraph:
    verts = list(_NAMES[:n])
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = rng.choice(labels)
            if m != INF:
                edges.append((verts[i], verts[j], m))
    return make_graph(verts, edges)


def random_word(
    rng: random.Random, g: DefiningGraph, length: int, positive: bool = False
) -> ArtinWord:
    letters = tuple(
        (rng.choice(g.vertices), 1 if positive else rng.choice((1, -1)))
        for _ in range(length)
    )
    return ArtinWord(letters)


def random_pure_word(rng: random.Random, g: DefiningGraph, blocks: int) -> ArtinWord:
    """Product of conjugated generator squares; always maps to 1 in the
    Coxeter group."""
    out = ArtinWord()
    for _ in range(blocks):
        conj = random_word(rng, g, rng.randrange(0, 3))
        v = rng.choice(g.vertices)
        square = ArtinWord(((v, 1), (v, 1)))
        out = out + conj + square + conj.inverse()
    return out


def random_subset(rng: random.Random, g: DefiningGraph) -> tuple[str, ...]:
    return tuple(v for v in g.vertices if rng.random() < 0.5)


def random_single_cone_graph(rng: random.Random, n: int) -> DefiningGraph:
    """Graph with exactly one cone point (the first vertex).

    The cone vertex gets finite labels to everything; every other vertex is
    given at least one non-neighbor among the rest, so no second cone point
    can exist.  Needs n >= 3.
    """
    assert n >= 3
    verts = list(_NAMES[:n])
    cone = verts[0]
    edges = [(cone, v, rng.choice((2, 2, 3, 4))) for v in verts[1:]]
    others = verts[1:]
    forbidden: set[tuple[str, str]] = set()
    for u in others:
        partners = [v for v in others if v != u]
        v = rng.choice(partners)
        forbidden.add((min(u, v), max(u, v)))
    for i in range(len(others)):
        for j in range(i + 1, len(others)):
            u, v = others[i], others[j]
            if (min(u, v), max(u, v)) in forbidden:
                continue
            m = rng.choice((2, 3, INF))
            if m != INF:
                edges.append((u, v, m))
    g = make_graph(verts, edges)
    assert g.cone_points() == (cone,)
    return g


def random_cone_free_graph(rng: random.Random, n: int) -> DefiningGraph:
    """Graph with no cone points: every vertex gets at least one non-neighbor."""
    assert n >= 2
    verts = list(_NAMES[:n])
    forbidden: set[tuple[str, str]] = set()
    for u in verts:
        partners = [v for v in verts if v != u]
        v = rng.choice(partners)
        forbidden.add((min(u, v), max(u, v)))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            u, v = verts[i], verts[j]
            if (min(u, v), max(u, v)) in forbidden:
                continue
            m = rng.choice((2, 3, 4, INF))
            if m != INF:
                edges.append((u, v, m))
    g = make_graph(verts, edges)
    assert g.cone_points() == ()
    return g
