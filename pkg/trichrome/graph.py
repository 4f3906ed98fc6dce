import collections
import dataclasses

# adjacency rows are python ints used as bitsets over 0..n-1
MAX_VERTICES = 64

class CapacityError(ValueError):
    pass

class DomainError(ValueError):
    pass

def bit(v):
    return 1 << v

def bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def vertex_set(vertices):
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError('negative vertex: {}'.format(v))
        mask |= 1 << v
    return mask

def members(mask):
    return list(bits(mask))

@dataclasses.dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple
    # advisory, ignored by equality and isomorphism
    labels: tuple = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError('negative vertex count: {}'.format(self.n))
        if self.n > MAX_VERTICES:
            raise CapacityError('graph has {} vertices, at most {} supported'.format(self.n, MAX_VERTICES))
        if len(self.adj) != self.n:
            raise ValueError('expected {} adjacency rows, got {}'.format(self.n, len(self.adj)))
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError('expected {} labels, got {}'.format(self.n, len(self.labels)))

        everything = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~everything:
                raise ValueError('vertex {} has neighbors out of range'.format(v))
            if row >> v & 1:
                raise ValueError('vertex {} has a loop'.format(v))
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError('adjacency not symmetric at {}-{}'.format(v, u))

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError('edge {}-{} out of range for {} vertices'.format(u, v, n))
            if u == v:
                raise ValueError('loop at vertex {}'.format(u))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if labels is not None:
            labels = tuple(labels)
        return cls(n, tuple(rows), labels)

    @classmethod
    def empty(cls, n):
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n, prefix=None):
        everything = (1 << n) - 1
        labels = None
        if prefix:
            labels = tuple('{}{}'.format(prefix, i + 1) for i in range(n))
        return cls(n, tuple(everything & ~(1 << v) for v in range(n)), labels)

    @classmethod
    def path(cls, n):
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise ValueError('cycles need at least 3 vertices')
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete_bipartite(cls, a, b):
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    @classmethod
    def random(cls, n, p, rng):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        return cls.from_edges(n, edges)

    @classmethod
    def random_connected(cls, n, rng):
        while True:
            g = cls.random(n, rng.uniform(0.2, 0.8), rng)
            if is_connected(g):
                return g

    @property
    def all(self):
        return (1 << self.n) - 1

    @property
    def m(self):
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self):
        for v, row in enumerate(self.adj):
            for u in bits(row >> (v + 1)):
                yield (v, v + 1 + u)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    @property
    def max_degree(self):
        return max((row.bit_count() for row in self.adj), default=0)

    def label(self, v):
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def vertex(self, label):
        if self.labels is None:
            raise KeyError('graph has no labels')
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError('no vertex labeled {!r}'.format(label))

    def vertices(self, *labels):
        return vertex_set(self.vertex(l) for l in labels)

    def relabel(self, order):
        # order[new] = old
        if sorted(order) != list(range(self.n)):
            raise ValueError('not a permutation of {} vertices'.format(self.n))
        position = [0] * self.n
        for new, old in enumerate(order):
            position[old] = new
        rows = []
        for old in order:
            row = 0
            for u in bits(self.adj[old]):
                row |= 1 << position[u]
            rows.append(row)
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[old] for old in order)
        return Graph(self.n, tuple(rows), labels)

    def extend(self, neighbors):
        # one new vertex, numbered n, adjacent to the given set
        check_set(self, neighbors)
        rows = list(self.adj)
        for u in bits(neighbors):
            rows[u] |= 1 << self.n
        rows.append(neighbors)
        return Graph(self.n + 1, tuple(rows))

    def __repr__(self):
        return 'Graph(n={}, m={})'.format(self.n, self.m)

def check_set(g, s):
    if s < 0 or s >> g.n:
        raise ValueError('vertex set {:#x} out of range for {} vertices'.format(s, g.n))

class GraphBuilder:
    def __init__(self):
        self.labels = []
        self.index = {}
        self.pairs = []

    def add(self, *labels):
        for label in labels:
            if label in self.index:
                raise ValueError('duplicate vertex label {!r}'.format(label))
            self.index[label] = len(self.labels)
            self.labels.append(label)

    def connect(self, a, b):
        self.pairs.append((self.index[a], self.index[b]))

    def build(self):
        return Graph.from_edges(len(self.labels), self.pairs, self.labels)

def induced_subgraph(g, s):
    check_set(g, s)
    chosen = members(s)
    position = {v: i for i, v in enumerate(chosen)}
    rows = []
    for v in chosen:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << position[u]
        rows.append(row)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in chosen)
    return Graph(len(chosen), tuple(rows), labels)

def _merge_labels(g, h):
    if g.labels is None and h.labels is None:
        return None
    return tuple(g.label(v) for v in range(g.n)) + tuple(h.label(v) for v in range(h.n))

def disjoint_union(g, h):
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError('union has {} vertices, at most {} supported'.format(n, MAX_VERTICES))
    rows = tuple(g.adj) + tuple(row << g.n for row in h.adj)
    return Graph(n, rows, _merge_labels(g, h))

def join(g, h):
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError('join has {} vertices, at most {} supported'.format(n, MAX_VERTICES))
    rows = tuple(row | (h.all << g.n) for row in g.adj)
    rows += tuple((row << g.n) | g.all for row in h.adj)
    return Graph(n, rows, _merge_labels(g, h))

def reach(g, start, within):
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen

def connected_within(g, s):
    if not s:
        return True
    start = (s & -s).bit_length() - 1
    return reach(g, start, s) == s

def is_connected(g):
    if g.n == 0:
        raise ValueError('connectivity of the empty graph is undefined')
    return connected_within(g, g.all)

def components(g):
    left = g.all
    result = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach(g, start, left)
        result.append(comp)
        left &= ~comp
    return result

def is_bipartite(g):
    side_a = 0
    side_b = 0
    for comp in components(g):
        start = (comp & -comp).bit_length() - 1
        colors = {start: 0}
        queue = collections.deque([start])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if u not in colors:
                    colors[u] = 1 - colors[v]
                    queue.append(u)
                elif colors[u] == colors[v]:
                    return None
        for v, c in colors.items():
            if c:
                side_b |= 1 << v
            else:
                side_a |= 1 << v
    return (side_a, side_b)

def is_stable(g, s):
    return all(not (g.adj[v] & s) for v in bits(s))

def is_dominating(g, d, target):
    check_set(g, d)
    check_set(g, target)
    for v in bits(target & ~d):
        if not g.adj[v] & d:
            return False
    return True

def maximum_clique(g, within=None):
    if within is None:
        within = g.all
    best = 0
    best_size = 0

    def expand(clique, size, cand):
        nonlocal best, best_size
        if not cand:
            if size > best_size:
                best, best_size = clique, size
            return
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(clique | (1 << v), size + 1, cand & g.adj[v])

    expand(0, 0, within)
    return best

def clique_number(g):
    if g.n == 0:
        raise ValueError('clique number of the empty graph is undefined')
    return maximum_clique(g).bit_count()

def iter_maximal_stable(g, within):
    # bron-kerbosch with pivoting, run on the complement inside `within`
    adj = g.adj

    def others(v):
        return within & ~adj[v] & ~(1 << v)

    def expand(r, p, x):
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (p & others(u)).bit_count())
        for v in bits(p & ~others(pivot)):
            nv = others(v)
            yield from expand(r | (1 << v), p & nv, x & nv)
            p &= ~(1 << v)
            x |= 1 << v

    if within:
        yield from expand(0, within, 0)

def maximal_stable_sets(g, within=None):
    if within is None:
        within = g.all
    check_set(g, within)
    return sorted(iter_maximal_stable(g, within))
