import random

from misynth.bipartite import BipartiteGraph


def random_bipartite(rng: random.Random, max_left=5, max_right=5,
                     allow_isolated=False) -> BipartiteGraph:
    """A random small bipartite graph; by default without isolated vertices."""
    while True:
        nl = rng.randint(1, max_left)
        nr = rng.randint(1, max_right)
        p = rng.uniform(0.2, 0.8)
        adj = [0] * nl
        for l in range(nl):
            for r in range(nr):
                if rng.random() < p:
                    adj[l] |= 1 << r
        g = BipartiteGraph(nl, nr, tuple(adj))
        if allow_isolated or not g.has_isolated_vertices():
            return g
