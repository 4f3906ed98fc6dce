import concurrent.futures
import contextlib
import dataclasses
import functools
import itertools
import random
import time

import tqdm

import trichrome.canon
import trichrome.coloring
import trichrome.constructions
import trichrome.graph
import trichrome.graph6
from trichrome.graph import bits, CapacityError, DomainError

MAX_VERTICES = 10

# levels up to this order are kept in memory once generated
CACHED_LEVELS = 8

# known class counts of connected graphs, for n = 1..10
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571)

def _canonical_deletion(child, labeling):
    # the non-cut vertex placed last by the canonical labeling
    candidates = [v for v in range(child.n) if trichrome.graph.connected_within(child, child.all & ~(1 << v))]
    return max(candidates, key=labeling.position)

def _accepts(child, labeling):
    v = child.n - 1
    w = _canonical_deletion(child, labeling)
    if v == w:
        return True
    if child.degree(v) != child.degree(w):
        return False
    return trichrome.canon.same_orbit(child, v, w)

def children(parent):
    # connected one-vertex extensions of parent whose canonical deletion
    # removes the new vertex again, one per isomorphism class
    seen = set()
    result = []
    for neighbors in range(1, 1 << parent.n):
        child = parent.extend(neighbors)
        labeling = trichrome.canon.canonical_labeling(child)
        if labeling.form in seen:
            continue
        if not _accepts(child, labeling):
            continue
        seen.add(labeling.form)
        result.append(child.relabel(labeling.order))
    return result

@contextlib.contextmanager
def parallel_map(workers):
    if workers is None or workers <= 1:
        yield map
        return
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        yield functools.partial(executor.map, chunksize=64)

def _progress(items, enabled, desc):
    if not enabled:
        return items
    return tqdm.tqdm(items, unit='g', desc=desc, leave=False)

_levels = {}

def _check_order(n):
    if n < 1:
        raise ValueError('connected graphs need n >= 1, got {}'.format(n))
    if n > MAX_VERTICES:
        raise CapacityError('generation supports at most {} vertices, got {}'.format(MAX_VERTICES, n))

def level(n, workers=1, progress=False):
    # every connected graph on n vertices, cached for reuse as parents
    _check_order(n)
    if n == 1:
        return (trichrome.graph.Graph.empty(1),)
    if n not in _levels:
        parents = level(n - 1, workers, progress)
        with parallel_map(workers) as mapper:
            found = []
            for batch in _progress(mapper(children, parents), progress, 'n={}'.format(n)):
                found.extend(batch)
        _levels[n] = tuple(found)
    return _levels[n]

def connected_graphs(n, workers=1, progress=False):
    _check_order(n)
    if n <= CACHED_LEVELS:
        yield from level(n, workers, progress)
        return
    parents = level(n - 1, workers, progress)
    with parallel_map(workers) as mapper:
        for batch in _progress(mapper(children, parents), progress, 'n={}'.format(n)):
            yield from batch

def count_connected(n, workers=1, progress=False):
    start = time.monotonic()
    count = sum(1 for _ in connected_graphs(n, workers, progress))
    return {
        'n': n,
        'class_count': count,
        'elapsed_ms': int((time.monotonic() - start) * 1000),
    }

def labeled_connected_classes(n):
    # brute force over every labeled graph; only feasible for tiny n
    if n < 1 or n > 6:
        raise CapacityError('labeled brute force supports 1 <= n <= 6, got {}'.format(n))
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        g = trichrome.graph.Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if trichrome.graph.is_connected(g):
            forms.add(trichrome.canon.canonical_form(g))
    return forms

# class counts of all graphs, connected or not, for n = 1..8
GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346)

def _component_sizes(n, largest):
    # partitions of n into non-increasing parts
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _component_sizes(n - part, part):
            yield (part,) + rest

def all_graphs(n, workers=1, progress=False):
    # every graph on n vertices, one per class, as a multiset of connected components
    _check_order(n)
    if n > CACHED_LEVELS:
        raise CapacityError('all graphs supported up to {} vertices, got {}'.format(CACHED_LEVELS, n))
    for sizes in _component_sizes(n, n):
        groups = [(size, len(list(run))) for size, run in itertools.groupby(sizes)]
        choices = [itertools.combinations_with_replacement(level(size, workers, progress), count) for size, count in groups]
        for picked in itertools.product(*choices):
            parts = [g for group in picked for g in group]
            yield functools.reduce(trichrome.graph.disjoint_union, parts)

def achromatic_equals(g, h):
    # complete colorings exist for every k between chi and psi, so psi == h
    # iff one exists for h and none for h + 1
    if h > g.n or trichrome.coloring.complete_coloring_with(g, h) is None:
        return False
    if h + 1 > trichrome.coloring.achromatic_upper_bound(g):
        return True
    return trichrome.coloring.complete_coloring_with(g, h + 1) is None

def passes_filters(g, t):
    # necessary conditions only, cheapest first
    if g.n < t.h or g.m < t.h * (t.h - 1) // 2:
        return False
    if g.max_degree + 1 < t.g:
        return False
    if trichrome.graph.clique_number(g) > t.f:
        return False
    if t.f >= 3 and trichrome.graph.is_bipartite(g) is not None:
        return False
    return True

def realizes(g, t):
    chi, _ = trichrome.coloring.chromatic_number(g)
    if chi != t.f:
        return False
    gamma, _ = trichrome.coloring.grundy_number(g)
    if gamma != t.g:
        return False
    return achromatic_equals(g, t.h)

@dataclasses.dataclass
class ScanResult:
    count: int
    matches: list
    rechecked: int

class RealizerScan:
    # fraction of filtered-out graphs re-run through the solvers
    RECHECK = 0.01

    def __init__(self, triple, recheck=None):
        self.triple = triple
        self.recheck = self.RECHECK if recheck is None else recheck

    def scan(self, graphs, seed=b''):
        rng = random.Random(seed + str(self.triple).encode('ascii'))
        count = 0
        rechecked = 0
        matches = []
        for g in graphs:
            count += 1
            if passes_filters(g, self.triple):
                if realizes(g, self.triple):
                    matches.append(g)
            elif self.recheck and rng.random() < self.recheck:
                rechecked += 1
                if realizes(g, self.triple):
                    raise RuntimeError('filter rejected a realizer of {}: {}'.format(self.triple, trichrome.graph6.write_graph6(g)))
        return ScanResult(count, matches, rechecked)

    def __call__(self, parent):
        seed = trichrome.canon.canonical_form(parent).data
        return self.scan(children(parent), seed)

    def run(self, n, workers=1, progress=False):
        _check_order(n)
        if n <= CACHED_LEVELS:
            return self.scan(_progress(level(n, workers, progress), progress, '{} n={}'.format(self.triple, n)))
        parents = level(n - 1, workers, progress)
        total = ScanResult(0, [], 0)
        with parallel_map(workers) as mapper:
            for part in _progress(mapper(self, parents), progress, '{} n={}'.format(self.triple, n)):
                total.count += part.count
                total.matches.extend(part.matches)
                total.rechecked += part.rechecked
        return total

def _sorted(graphs):
    return sorted(graphs, key=trichrome.canon.canonical_form)

@dataclasses.dataclass
class MinOrderResult:
    triple: trichrome.constructions.Triple
    formula: int
    search_min: int | None
    realizers: list

    @property
    def passed(self):
        return self.search_min == self.formula

def verify_min_order(t, workers=1, progress=False):
    if not t.realizable:
        raise DomainError('triple {} is not realizable'.format(t))
    formula = trichrome.constructions.min_order(t)
    if formula > MAX_VERTICES:
        raise CapacityError('min order {} of {} is beyond {} vertices'.format(formula, t, MAX_VERTICES))

    scan = RealizerScan(t)
    for n in range(1, formula + 1):
        found = scan.run(n, workers, progress).matches
        if found:
            return MinOrderResult(t, formula, n, _sorted(found))
    return MinOrderResult(t, formula, None, [])

@dataclasses.dataclass(frozen=True)
class OptimalityQuery:
    h: int

    def __post_init__(self):
        if self.h < 4:
            raise ValueError('h-optimal graphs need h >= 4, got {}'.format(self.h))

    @property
    def n(self):
        return 2 * self.h - 2

    @property
    def target(self):
        return trichrome.constructions.Triple(3, 3, self.h)

# expected class counts, by h
H_OPTIMAL_COUNTS = {4: 7, 5: 3, 6: 2}

def h_optimal_graphs(h, workers=1, progress=False):
    if not 4 <= h <= 6:
        raise CapacityError('h-optimal enumeration supports 4 <= h <= 6, got {}'.format(h))
    query = OptimalityQuery(h)
    found = RealizerScan(query.target).run(query.n, workers, progress).matches
    return _sorted(found)

def find_induced_reduced(g, theta):
    # pairs (a_i, b_i) with a_i ~ b_j exactly when i != j, both sides stable
    if theta < 1:
        raise ValueError('theta must be >= 1, got {}'.format(theta))
    if 2 * theta > g.n:
        return None
    adj = g.adj

    def extend(count, side_a, side_b, last):
        if count == theta:
            return side_a | side_b
        used = side_a | side_b
        cand_a = g.all & ~used & ~((1 << (last + 1)) - 1)
        for a in bits(side_a):
            cand_a &= ~adj[a]
        for b in bits(side_b):
            cand_a &= adj[b]
        if cand_a.bit_count() < theta - count:
            return None
        for a in bits(cand_a):
            cand_b = g.all & ~used & ~(1 << a) & ~adj[a]
            for b in bits(side_b):
                cand_b &= ~adj[b]
            for x in bits(side_a):
                cand_b &= adj[x]
            for b in bits(cand_b):
                found = extend(count + 1, side_a | (1 << a), side_b | (1 << b), a)
                if found is not None:
                    return found
        return None

    return extend(0, 0, 0, -1)

ALL_COLORINGS_MAX_VERTICES = 12

def all_complete_colorings(g, k):
    # classes come out ordered by least vertex, so each partition appears once
    return iter(trichrome.coloring.CompleteColoringSearch(g, k, limit=ALL_COLORINGS_MAX_VERTICES))
