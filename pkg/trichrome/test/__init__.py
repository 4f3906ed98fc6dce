import itertools
import random

import networkx

import trichrome.coloring
import trichrome.graph

class Check:
    # table of inputs handed to check() one at a time
    CASES = []

    # long-running checks only run with --extended
    EXTENDED = False

    SEED = 0

    def __init__(self, extended=False):
        super().__init__()
        self.extended = extended
        self.rng = random.Random('{}:{}'.format(self.name, self.SEED))

    @property
    def name(self):
        return self.__class__.__name__

    @classmethod
    def iter_tests(cls, extended=False, filter=lambda t: True):
        for subclass in cls.__subclasses__():
            if not vars(subclass).get('abstract', False):
                if extended or not subclass.EXTENDED:
                    t = subclass(extended)
                    if filter(t):
                        yield t
            yield from subclass.iter_tests(extended, filter)

    def run(self):
        if not self.CASES:
            raise NotImplementedError
        for case in self.CASES:
            self.check(case)

    def check(self, case):
        raise NotImplementedError

    def assert_eq(self, name, expected, real):
        if expected != real:
            raise RuntimeError('bad value for {} (expected {}, got {})'.format(name, expected, real))

    def assert_true(self, name, value):
        if not value:
            raise RuntimeError('check failed: {}'.format(name))

    def assert_raises(self, name, exc, fn, *args, **kwargs):
        try:
            fn(*args, **kwargs)
        except exc:
            return
        raise RuntimeError('expected {} from {}'.format(exc.__name__, name))

def from_networkx(nx_graph):
    nodes = sorted(nx_graph.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return trichrome.graph.Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges()])

def atlas(max_n=7, min_n=1):
    # every graph on up to seven vertices, one per isomorphism class
    for nx_graph in networkx.graph_atlas_g():
        if min_n <= nx_graph.number_of_nodes() <= max_n:
            yield from_networkx(nx_graph)

def all_labeled(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield trichrome.graph.Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])

def permuted(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    return g.relabel(order)

def brute_isomorphic(g, h):
    if g.n != h.n or g.m != h.m:
        return False
    for order in itertools.permutations(range(g.n)):
        if g.relabel(order) == h:
            return True
    return False

def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]

def brute_achromatic(g):
    best = 0
    for partition in set_partitions(list(range(g.n))):
        if len(partition) <= best:
            continue
        classes = [trichrome.graph.vertex_set(block) for block in partition]
        c = trichrome.coloring.Coloring.from_classes(g, classes)
        if trichrome.coloring.is_complete(c):
            best = len(partition)
    return best

def least_coloring(g, k, predicate):
    # itertools.product runs through color vectors in lexicographic order
    for colors in itertools.product(range(1, k + 1), repeat=g.n):
        if len(set(colors)) == k:
            c = trichrome.coloring.Coloring(g, colors)
            if predicate(c):
                return c
    return None
