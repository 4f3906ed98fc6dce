import dataclasses

import trichrome.coloring
import trichrome.graph
from trichrome.graph import DomainError, GraphBuilder

@dataclasses.dataclass(frozen=True)
class Triple:
    f: int
    g: int
    h: int

    def __post_init__(self):
        if not 2 <= self.f <= self.g <= self.h:
            raise ValueError('triple ({}, {}, {}) does not satisfy 2 <= f <= g <= h'.format(self.f, self.g, self.h))

    @property
    def realizable(self):
        return self.g >= 3 or (self.f, self.g, self.h) == (2, 2, 2)

    def as_tuple(self):
        return (self.f, self.g, self.h)

    def __str__(self):
        return '({}, {}, {})'.format(self.f, self.g, self.h)

@dataclasses.dataclass(frozen=True)
class ConstructionParams:
    # which builder realize() uses: 'complete', 'gstar' or 'l'
    family: str
    # size of the clique joined on at the end
    clique: int
    k: int | None = None
    gamma_ins: int | None = None
    ell: int | None = None
    variant: int | None = None

    @classmethod
    def for_triple(cls, t):
        if not t.realizable:
            raise DomainError('triple {} is not realizable'.format(t))
        if t.f == t.g == t.h:
            return cls('complete', t.f)
        if t.f < t.g:
            g, h = t.g - t.f + 2, t.h - t.f + 2
            return cls('gstar', t.f - 2, k=h, gamma_ins=g - 3)
        h = t.h - t.f + 3
        return cls('l', t.f - 3, k=h - 2, ell=h - 2, variant=2)

def _u(i):
    return 'u{}'.format(i)

def _w(i):
    return 'w{}'.format(i)

def _bipartite_builder(k):
    b = GraphBuilder()
    b.add(*(_u(i) for i in range(1, k)))
    b.add(*(_w(j) for j in range(2, k + 1)))
    for i in range(1, k):
        for j in range(i + 1, k + 1):
            b.connect(_u(i), _w(j))
    return b

def basic_bipartite(k):
    if k < 2:
        raise ValueError('basic bipartite graph needs k >= 2, got {}'.format(k))
    return _bipartite_builder(k).build()

def g_star(g, h):
    if not 3 <= g <= h:
        raise ValueError('g_star needs 3 <= g <= h, got g={} h={}'.format(g, h))
    b = _bipartite_builder(h)
    gamma = g - 3
    for i in range(2, h):
        for j in range(2, h - 1):
            if 1 <= i - j <= gamma:
                b.connect(_u(i), _w(j))
    return b.build()

def reduced_graph(t):
    if t < 1:
        raise ValueError('reduced graph needs t >= 1, got {}'.format(t))
    b = GraphBuilder()
    b.add(*('a{}'.format(i) for i in range(1, t + 1)))
    b.add(*('b{}'.format(i) for i in range(1, t + 1)))
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            if i != j:
                b.connect('a{}'.format(i), 'b{}'.format(j))
    return b.build()

def _extended_builder(ell):
    # B_ell with u_ell and w_1 added as isolated vertices; also used for
    # ell = 0 and 1 when comparing against small leftover structures
    b = GraphBuilder()
    b.add(*(_u(i) for i in range(1, ell + 1)))
    b.add(*(_w(j) for j in range(1, ell + 1)))
    for i in range(1, ell):
        for j in range(i + 1, ell + 1):
            b.connect(_u(i), _w(j))
    return b

def extended_any(ell):
    return _extended_builder(ell).build()

def extended_graph(ell):
    if ell < 2:
        raise ValueError('extended graph needs ell >= 2, got {}'.format(ell))
    return extended_any(ell)

def l_graph(h, variant):
    if h < 4:
        raise ValueError('L graphs need h >= 4, got {}'.format(h))
    if variant not in (1, 2):
        raise ValueError('variant must be 1 or 2, got {!r}'.format(variant))
    ell = h - 2
    b = _extended_builder(ell)
    b.add('q1', 'q2')
    for i in range(1, ell + 1):
        b.connect('q1', _u(i))
        b.connect('q2', _w(i))
    b.connect('q2', _u(ell))
    b.connect('q1', 'q2')
    if variant == 1:
        b.connect('q1', _w(1))
    return b.build()

def disjoint_matching(h):
    if h < 2:
        raise ValueError('matching graph needs h >= 2, got {}'.format(h))
    count = h * (h - 1) // 2
    b = GraphBuilder()
    for i in range(1, count + 1):
        a, z = 'x{}'.format(i), 'y{}'.format(i)
        b.add(a, z)
        b.connect(a, z)
    return b.build()

def is_realizable(t):
    return t.realizable

def min_order(t):
    if not t.realizable:
        raise DomainError('triple {} is not realizable'.format(t))
    if t.f == t.g == t.h:
        return t.f
    if t.f < t.g:
        return 2 * t.h - t.f
    return 2 * t.h - t.f + 1

def realize(t):
    params = ConstructionParams.for_triple(t)
    if params.family == 'complete':
        return trichrome.graph.Graph.complete(t.f, prefix='k')
    if params.family == 'gstar':
        base = g_star(params.gamma_ins + 3, params.k)
    else:
        base = l_graph(params.ell + 2, params.variant)
    if not params.clique:
        return base
    return trichrome.graph.join(base, trichrome.graph.Graph.complete(params.clique, prefix='k'))

def _coloring(g, assignment):
    return trichrome.coloring.Coloring(g, tuple(assignment[g.label(v)] for v in range(g.n)))

def grundy_witness_gstar(g, h):
    if not 3 <= g <= h:
        raise DomainError('no grundy witness for g={} h={}'.format(g, h))
    host = g_star(g, h)
    colors = {_u(1): g}
    for i in range(2, g):
        colors[_u(i)] = i - 1
        colors[_w(i)] = i - 1
    # when g = h this range is empty and u_2 alone in U keeps color 1
    for i in range(g, h):
        colors[_u(i)] = 1
    for j in range(g, h + 1):
        colors[_w(j)] = g - 1
    return _coloring(host, colors)

def achromatic_witness_gstar(h, g=3):
    if not 3 <= g <= h:
        raise DomainError('no achromatic witness for g={} h={}'.format(g, h))
    host = g_star(g, h)
    colors = {_u(1): 1, _w(h): h}
    for i in range(2, h):
        colors[_u(i)] = i
        colors[_w(i)] = i
    return _coloring(host, colors)

def _check_l(h, variant):
    if h < 4 or variant not in (1, 2):
        raise DomainError('no L graph for h={} variant={!r}'.format(h, variant))

def achromatic_witness_l(h, variant):
    _check_l(h, variant)
    host = l_graph(h, variant)
    colors = {'q1': 1, 'q2': 2}
    for i in range(1, h - 1):
        colors[_u(i)] = i + 2
        colors[_w(i)] = i + 2
    return _coloring(host, colors)

def chromatic_witness_l(h, variant):
    _check_l(h, variant)
    host = l_graph(h, variant)
    ell = h - 2
    colors = {'q1': 3, 'q2': 1, _u(ell): 2, _w(1): 2}
    for i in range(1, ell):
        colors[_u(i)] = 1
        colors[_w(i + 1)] = 2
    return _coloring(host, colors)

FAMILIES = {
    'bk': (basic_bipartite, ['k']),
    'gstar': (g_star, ['g', 'h']),
    'reduced': (reduced_graph, ['t']),
    'extended': (extended_graph, ['ell']),
    'l1': (lambda h: l_graph(h, 1), ['h']),
    'l2': (lambda h: l_graph(h, 2), ['h']),
    'kf': (lambda f: trichrome.graph.Graph.complete(f, prefix='k'), ['f']),
    'matching': (disjoint_matching, ['h']),
}

def construct(family, **params):
    try:
        builder, names = FAMILIES[family]
    except KeyError:
        raise ValueError('unknown family: {}'.format(family))
    missing = [name for name in names if params.get(name) is None]
    if missing:
        raise ValueError('family {} needs {}'.format(family, ', '.join('--' + name for name in missing)))
    if family == 'kf' and params['f'] < 1:
        raise ValueError('kf needs f >= 1, got {}'.format(params['f']))
    return builder(*(params[name] for name in names))
