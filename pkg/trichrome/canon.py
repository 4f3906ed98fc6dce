import dataclasses

import trichrome.graph
import trichrome.graph6
from trichrome.graph import bits

MAX_VERTICES = 16

@dataclasses.dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    data: bytes

    def hex(self):
        return self.data.hex()

    @classmethod
    def from_hex(cls, text):
        data = bytes.fromhex(text)
        g = trichrome.graph6.parse_graph6(data.decode('ascii'))
        return cls(g.n, data)

    def graph(self):
        return trichrome.graph6.parse_graph6(self.data.decode('ascii'))

@dataclasses.dataclass(frozen=True)
class Labeling:
    form: CanonicalForm
    # order[position] = vertex
    order: tuple

    def position(self, v):
        return self.order.index(v)

def refine(adj, cells):
    # equitable refinement; the result only depends on cell structure,
    # never on vertex names
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells):
            splitter = cells[i]
            result = []
            for cell in cells:
                if not cell & (cell - 1):
                    result.append(cell)
                    continue
                groups = {}
                for v in bits(cell):
                    count = (adj[v] & splitter).bit_count()
                    groups[count] = groups.get(count, 0) | (1 << v)
                if len(groups) > 1:
                    changed = True
                    result.extend(groups[count] for count in sorted(groups))
                else:
                    result.append(cell)
            cells = result
            i += 1
    return cells

def equitable_partition(g, cells=None):
    if cells is None:
        cells = [g.all] if g.n else []
    return refine(g.adj, cells)

def _encode(adj, order):
    position = [0] * len(order)
    for i, v in enumerate(order):
        position[v] = i
    code = []
    for v in order:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << position[u]
        code.append(row)
    return tuple(code)

def _orbit_roots(n, automorphisms, fixed):
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for perm in automorphisms:
        if any(perm[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[a] = b
    return find

class Search:
    def __init__(self, g, cells=None):
        if g.n > MAX_VERTICES:
            raise trichrome.graph.CapacityError('canonical form supports at most {} vertices, got {}'.format(MAX_VERTICES, g.n))
        self.g = g
        self.cells = cells
        self.first = None
        self.best = None
        self.automorphisms = []

    def leaf(self, cells):
        order = tuple(cell.bit_length() - 1 for cell in cells)
        code = _encode(self.g.adj, order)
        if self.first is None:
            self.first = (code, order)
            self.best = (code, order)
            return
        for known_code, known_order in (self.first, self.best):
            if code == known_code:
                perm = [0] * self.g.n
                for a, b in zip(known_order, order):
                    perm[a] = b
                self.automorphisms.append(tuple(perm))
                return
        if code > self.best[0]:
            self.best = (code, order)

    def expand(self, cells, fixed):
        target = None
        for i, cell in enumerate(cells):
            size = cell.bit_count()
            if size > 1 and (target is None or size < cells[target].bit_count()):
                target = i
        if target is None:
            self.leaf(cells)
            return

        cell = cells[target]
        tried = []
        for v in bits(cell):
            if tried:
                find = _orbit_roots(self.g.n, self.automorphisms, fixed)
                if any(find(v) == find(t) for t in tried):
                    continue
            tried.append(v)
            split = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            self.expand(refine(self.g.adj, split), fixed + [v])

    def run(self):
        n = self.g.n
        if n == 0:
            order = ()
        else:
            self.expand(equitable_partition(self.g, self.cells), [])
            order = self.best[1]
        canonical = self.g.relabel(order) if n else self.g
        data = trichrome.graph6.write_graph6(canonical).encode('ascii')
        return Labeling(CanonicalForm(n, data), order)

def canonical_labeling(g, cells=None):
    return Search(g, cells).run()

def canonical_form(g):
    return canonical_labeling(g).form

def are_isomorphic(g, h):
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.adj[v].bit_count() for v in range(g.n)) != sorted(h.adj[v].bit_count() for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)

def marked_form(g, v):
    # canonical form with v individualized; equal forms <=> same orbit
    rest = g.all & ~(1 << v)
    cells = [rest, 1 << v] if rest else [1 << v]
    return canonical_labeling(g, cells).form

def same_orbit(g, v, w):
    if v == w:
        return True
    return marked_form(g, v) == marked_form(g, w)
