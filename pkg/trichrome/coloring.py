import dataclasses

import trichrome.graph
import trichrome.graph6
from trichrome.graph import bits, CapacityError

@dataclasses.dataclass(frozen=True)
class Coloring:
    host: trichrome.graph.Graph
    colors: tuple

    def __post_init__(self):
        if len(self.colors) != self.host.n:
            raise ValueError('expected {} colors, got {}'.format(self.host.n, len(self.colors)))
        for v, c in enumerate(self.colors):
            if not isinstance(c, int) or c < 1:
                raise ValueError('vertex {} has color {!r}, colors start at 1'.format(v, c))
        used = set(self.colors)
        for c in range(1, self.k + 1):
            if c not in used:
                raise ValueError('color class {} is empty'.format(c))

    @classmethod
    def from_classes(cls, host, classes):
        colors = [0] * host.n
        for c, cls_mask in enumerate(classes, start=1):
            for v in bits(cls_mask):
                if colors[v]:
                    raise ValueError('vertex {} is in two classes'.format(v))
                colors[v] = c
        return cls(host, tuple(colors))

    @property
    def k(self):
        return max(self.colors, default=0)

    def class_of(self, c):
        mask = 0
        for v, color in enumerate(self.colors):
            if color == c:
                mask |= 1 << v
        return mask

    @property
    def classes(self):
        result = [0] * self.k
        for v, c in enumerate(self.colors):
            result[c - 1] |= 1 << v
        return result

    def normalized(self):
        # colors renumbered by first appearance in vertex order
        names = {}
        for c in self.colors:
            if c not in names:
                names[c] = len(names) + 1
        return Coloring(self.host, tuple(names[c] for c in self.colors))

    def as_json(self):
        return list(self.colors)

def is_proper(c):
    g = c.host
    for u, v in g.edges():
        if c.colors[u] == c.colors[v]:
            return False
    return True

def _joined(g, a, b):
    return any(g.adj[v] & b for v in bits(a))

def is_complete(c):
    if not is_proper(c):
        return False
    classes = c.classes
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if not _joined(c.host, classes[i], classes[j]):
                return False
    return True

def is_grundy(c):
    if not is_proper(c):
        return False
    g = c.host
    for v in range(g.n):
        seen = 0
        for u in bits(g.adj[v]):
            seen |= 1 << c.colors[u]
        needed = (1 << c.colors[v]) - 2
        if seen & needed != needed:
            return False
    return True

class ChromaticSolver:
    MAX_VERTICES = trichrome.graph.MAX_VERTICES

    def __init__(self, g):
        if g.n == 0:
            raise ValueError('chromatic number of the empty graph is undefined')
        self.g = g
        self.clique = trichrome.graph.maximum_clique(g)

    def colorable(self, k):
        g = self.g
        colors = [0] * g.n
        for c, v in enumerate(bits(self.clique), start=1):
            if c > k:
                return None
            colors[v] = c
        used = self.clique.bit_count()

        def saturation(v):
            seen = 0
            for u in bits(g.adj[v]):
                seen |= 1 << colors[u]
            return seen & ~1

        def assign(left, used):
            if not left:
                return True
            # dsatur: most saturated first, then highest degree, then lowest index
            v = max(bits(left), key=lambda u: (saturation(u).bit_count(), g.degree(u), -u))
            blocked = saturation(v)
            for c in range(1, min(k, used + 1) + 1):
                if blocked >> c & 1:
                    continue
                colors[v] = c
                if assign(left & ~(1 << v), max(used, c)):
                    return True
                colors[v] = 0
            return False

        if assign(g.all & ~self.clique, used):
            return Coloring(g, tuple(colors))
        return None

    def least(self, k):
        # lexicographically least proper k-coloring, vertices in index order
        g = self.g
        colors = [0] * g.n

        def blocked(v):
            seen = 0
            for u in bits(g.adj[v]):
                seen |= 1 << colors[u]
            return seen & ~1

        full = (1 << (k + 1)) - 2

        def assign(v, used):
            if v == g.n:
                return used == k
            taken = blocked(v)
            for c in range(1, min(k, used + 1) + 1):
                if taken >> c & 1:
                    continue
                colors[v] = c
                wiped = any(not colors[u] and blocked(u) & full == full for u in bits(g.adj[v]))
                if not wiped and assign(v + 1, max(used, c)):
                    return True
                colors[v] = 0
            return False

        if not assign(0, 0):
            raise RuntimeError('no proper {}-coloring in index order'.format(k))
        return Coloring(g, tuple(colors))

    def solve(self):
        k = self.clique.bit_count()
        while self.colorable(k) is None:
            k += 1
        witness = self.least(k)
        if not is_complete(witness):
            raise RuntimeError('chromatic witness with {} colors is not complete'.format(k))
        return (k, witness)

def chromatic_number(g):
    return ChromaticSolver(g).solve()

class GrundySolver:
    MAX_VERTICES = 24

    def __init__(self, g):
        if g.n > self.MAX_VERTICES:
            raise CapacityError('grundy number supports at most {} vertices, got {}'.format(self.MAX_VERTICES, g.n))
        self.g = g
        self.memo = {}

    def bound(self, s):
        degree = max((self.g.adj[v] & s).bit_count() for v in bits(s))
        return min(s.bit_count(), degree + 1)

    def value(self, s):
        # the first color class of a grundy coloring is a maximal stable set
        if not s:
            return 0
        known = self.memo.get(s)
        if known is not None:
            return known
        best = 0
        limit = self.bound(s)
        for t in trichrome.graph.iter_maximal_stable(self.g, s):
            best = max(best, 1 + self.value(s & ~t))
            if best == limit:
                break
        self.memo[s] = best
        return best

    def least(self, k):
        # lexicographically least grundy coloring with k colors; colors missing
        # below a vertex must still fit on its uncolored neighbors
        g = self.g
        colors = [0] * g.n
        later = [0] * (g.n + 1)
        for v in reversed(range(g.n)):
            later[v] = max(later[v + 1], g.degree(v) + 1)

        def viable(v):
            seen = 0
            free = 0
            for u in bits(g.adj[v]):
                if colors[u]:
                    seen |= 1 << colors[u]
                else:
                    free += 1
            missing = ((1 << colors[v]) - 2) & ~seen
            return missing.bit_count() <= free

        def assign(v, top):
            if v == g.n:
                return top == k
            if top < k and later[v] < k:
                return False
            taken = 0
            for u in bits(g.adj[v]):
                taken |= 1 << colors[u]
            for c in range(1, min(k, g.degree(v) + 1) + 1):
                if taken >> c & 1:
                    continue
                colors[v] = c
                if viable(v) and all(viable(u) for u in bits(g.adj[v]) if colors[u]):
                    if assign(v + 1, max(top, c)):
                        return True
                colors[v] = 0
            return False

        if not assign(0, 0):
            raise RuntimeError('no grundy coloring with {} colors in index order'.format(k))
        return Coloring(g, tuple(colors))

    def solve(self):
        k = self.value(self.g.all)
        witness = self.least(k)
        if witness.k != k or not is_grundy(witness):
            raise RuntimeError('grundy witness does not verify for k={}'.format(k))
        return (k, witness)

def grundy_number(g):
    if g.n == 0:
        raise ValueError('grundy number of the empty graph is undefined')
    return GrundySolver(g).solve()

FIRSTFIT_MAX_VERTICES = 10

def grundy_by_firstfit(g):
    # worst first-fit color count over all arrival orders; the partial
    # coloring fully determines what later arrivals can do
    if g.n > FIRSTFIT_MAX_VERTICES:
        raise CapacityError('first-fit oracle supports at most {} vertices, got {}'.format(FIRSTFIT_MAX_VERTICES, g.n))
    if g.n == 0:
        return 0
    limit = min(g.n, g.max_degree + 1)
    start = (0,) * g.n
    seen = {start}
    stack = [start]
    best = 0
    while stack:
        state = stack.pop()
        for v in range(g.n):
            if state[v]:
                continue
            taken = 0
            for u in bits(g.adj[v]):
                taken |= 1 << state[u]
            c = 1
            while taken >> c & 1:
                c += 1
            if c > best:
                best = c
                if best == limit:
                    return best
            nxt = state[:v] + (c,) + state[v + 1:]
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return best

class CompleteColoringSearch:
    MAX_VERTICES = 16

    def __init__(self, g, k, limit=None):
        if limit is None:
            limit = self.MAX_VERTICES
        if g.n > limit:
            raise CapacityError('complete coloring search supports at most {} vertices, got {}'.format(limit, g.n))
        if not 1 <= k <= g.n:
            raise ValueError('k={} out of range 1..{}'.format(k, g.n))
        self.g = g
        self.k = k

        # each later vertex can newly join at most min(k-1, deg) class pairs
        self.reach = [0] * (g.n + 1)
        for v in reversed(range(g.n)):
            self.reach[v] = self.reach[v + 1] + min(k - 1, g.degree(v))

    def __iter__(self):
        g = self.g
        k = self.k
        total = k * (k - 1) // 2
        classes = []
        # joined[i] is a bitset over class indices adjacent to class i
        joined = []
        colors = [0] * g.n

        def covered():
            return sum(row.bit_count() for row in joined) // 2

        def place(v):
            if v == g.n:
                if len(classes) == k and covered() == total:
                    yield Coloring(g, tuple(colors))
                return
            if g.n - v < k - len(classes):
                return
            if total - covered() > self.reach[v]:
                return

            options = list(range(len(classes)))
            if len(classes) < k:
                options.append(len(classes))
            for i in options:
                fresh = i == len(classes)
                if not fresh and g.adj[v] & classes[i]:
                    continue
                if fresh:
                    classes.append(0)
                    joined.append(0)
                saved = list(joined)
                touched = 0
                for j, other in enumerate(classes):
                    if j != i and g.adj[v] & other:
                        touched |= 1 << j
                joined[i] |= touched
                for j in bits(touched):
                    joined[j] |= 1 << i
                classes[i] |= 1 << v
                colors[v] = i + 1

                yield from place(v + 1)

                colors[v] = 0
                classes[i] &= ~(1 << v)
                joined[:] = saved
                if fresh:
                    classes.pop()
                    joined.pop()

        yield from place(0)

    def first(self):
        for coloring in self:
            return coloring
        return None

def complete_coloring_with(g, k):
    return CompleteColoringSearch(g, k).first()

def achromatic_upper_bound(g):
    k = 1
    while (k + 1) * k // 2 <= g.m:
        k += 1
    return min(g.n, k)

def achromatic_number(g):
    if g.n == 0:
        raise ValueError('achromatic number of the empty graph is undefined')
    if g.n > CompleteColoringSearch.MAX_VERTICES:
        raise CapacityError('achromatic number supports at most {} vertices, got {}'.format(CompleteColoringSearch.MAX_VERTICES, g.n))
    for k in range(achromatic_upper_bound(g), 0, -1):
        witness = complete_coloring_with(g, k)
        if witness is not None:
            return (k, witness)
    raise RuntimeError('no complete coloring found for {!r}'.format(g))

@dataclasses.dataclass(frozen=True)
class GrundyCertificate:
    h_set: int
    s_set: int
    k: int

    @classmethod
    def from_json(cls, data):
        return cls(
            trichrome.graph.vertex_set(data['h_set']),
            trichrome.graph.vertex_set(data['s_set']),
            int(data['k']),
        )

    def as_json(self):
        return {
            'h_set': trichrome.graph.members(self.h_set),
            's_set': trichrome.graph.members(self.s_set),
            'k': self.k,
        }

def check_certificate(g, cert):
    # returns (passed, reason)
    trichrome.graph.check_set(g, cert.h_set)
    trichrome.graph.check_set(g, cert.s_set)
    if cert.h_set & cert.s_set:
        return (False, 'not disjoint')
    if not trichrome.graph.is_stable(g, cert.s_set):
        return (False, 'not stable')
    if not trichrome.graph.is_dominating(g, cert.s_set, cert.h_set):
        return (False, 'does not dominate')
    if cert.k > 0:
        if not cert.h_set:
            return (False, 'empty subgraph cannot have grundy number {}'.format(cert.k))
        sub, _ = grundy_number(trichrome.graph.induced_subgraph(g, cert.h_set))
        if sub < cert.k:
            return (False, 'grundy number of subgraph is {} < {}'.format(sub, cert.k))

    total, _ = grundy_number(g)
    if total < cert.k + 1:
        raise RuntimeError('certificate checked but grundy number {} < {}'.format(total, cert.k + 1))
    return (True, None)

def has_property_pi(g):
    # every component is K_1 or complete bipartite
    for comp in trichrome.graph.components(g):
        size = comp.bit_count()
        if size == 1:
            continue
        sub = trichrome.graph.induced_subgraph(g, comp)
        sides = trichrome.graph.is_bipartite(sub)
        if sides is None:
            return False
        a, b = sides
        if sub.m != a.bit_count() * b.bit_count():
            return False
    return True

@dataclasses.dataclass(frozen=True)
class InvariantReport:
    graph: trichrome.graph.Graph
    omega: int
    chi: int
    gamma: int
    psi: int
    witnesses: dict

    @property
    def n(self):
        return self.graph.n

    @property
    def m(self):
        return self.graph.m

    @property
    def triple(self):
        return (self.chi, self.gamma, self.psi)

    def as_json(self):
        return {
            'n': self.n,
            'm': self.m,
            'omega': self.omega,
            'chi': self.chi,
            'gamma': self.gamma,
            'psi': self.psi,
            'witnesses': {name: c.as_json() for name, c in self.witnesses.items()},
        }

def analyze(g):
    omega = trichrome.graph.clique_number(g)
    chi, chi_witness = chromatic_number(g)
    gamma, gamma_witness = grundy_number(g)
    psi, psi_witness = achromatic_number(g)

    if not omega <= chi <= gamma <= psi:
        raise RuntimeError('invariant chain broken: omega={} chi={} gamma={} psi={}'.format(omega, chi, gamma, psi))
    checks = [
        ('chi', chi_witness, chi, is_proper),
        ('gamma', gamma_witness, gamma, is_grundy),
        ('psi', psi_witness, psi, is_complete),
    ]
    for name, witness, value, predicate in checks:
        if witness.k != value or not predicate(witness):
            raise RuntimeError('{} witness does not verify'.format(name))

    return InvariantReport(g, omega, chi, gamma, psi, {
        'chi': chi_witness,
        'gamma': gamma_witness,
        'psi': psi_witness,
    })

def order_lower_bound(g):
    psi, _ = achromatic_number(g)
    return 2 * psi - trichrome.graph.clique_number(g)
