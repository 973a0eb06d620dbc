"""Shared generators for random family parameters."""

from valuesets.carlitz import LinearMap, PoleSet


def random_g_and_poles(rng, F, n):
    """Uniform a, b in F_q*, then a random ordered tuple of interior poles."""
    q = F.q
    a = F.from_index(rng.randrange(1, q))
    b = F.from_index(rng.randrange(1, q))
    g = LinearMap(a, b)
    root = g.root
    cand = [x for x in F.nonzero() if x != root]
    interior = rng.sample(cand, n - 2)
    return g, PoleSet((F.zero, *interior, root))


def all_g_and_poles(F, n):
    from itertools import permutations

    for a in F.nonzero():
        for b in F.nonzero():
            g = LinearMap(a, b)
            root = g.root
            cand = [x for x in F.nonzero() if x != root]
            for interior in permutations(cand, n - 2):
                yield g, PoleSet((F.zero, *interior, root))
