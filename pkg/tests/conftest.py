"""Shared fixtures and small helpers for the test suite."""

import heapq
import itertools
import random

import pytest

from pebbletree import Configuration, Tree


def prufer_tree(rng, n):
    """Random labeled tree edges (independent copy of the decoder for tests)."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree(rng, n, ts_density=0.0):
    edges = prufer_tree(rng, n)
    ts = []
    if ts_density > 0:
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        cands = [v for v in range(n) if len(adj[v]) >= 2]
        rng.shuffle(cands)
        chosen = set()
        for v in cands:
            if len(chosen) >= max(1, int(n * ts_density)):
                break
            if all(w not in chosen for w in adj[v]):
                chosen.add(v)
        ts = sorted(chosen)
    return Tree(n, edges, ts)


def random_configuration(rng, tree, pebbles):
    resting = [v for v in range(tree.n) if tree.is_regular(v)]
    return Configuration(tree.n, rng.sample(resting, pebbles))


def canonical_form(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def encode(r, parent):
        subs = sorted(encode(w, r) for w in adj[r] if w != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(r, -1) for r in range(n))


def all_trees_upto(max_n):
    """One representative per isomorphism class for each n <= max_n."""
    out = []
    for n in range(1, max_n + 1):
        if n == 1:
            out.append(Tree(1, []))
            continue
        if n == 2:
            out.append(Tree(2, [(0, 1)]))
            continue
        seen = set()
        for seq in itertools.product(range(n), repeat=n - 2):
            degree = [1] * n
            for x in seq:
                degree[x] += 1
            leaves = [v for v in range(n) if degree[v] == 1]
            heapq.heapify(leaves)
            edges = []
            for x in seq:
                leaf = heapq.heappop(leaves)
                edges.append((leaf, x))
                degree[x] -= 1
                if degree[x] == 1:
                    heapq.heappush(leaves, x)
            edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
            key = canonical_form(n, edges)
            if key not in seen:
                seen.add(key)
                out.append(Tree(n, edges))
    return out


@pytest.fixture(scope="session")
def small_trees():
    return all_trees_upto(7)
