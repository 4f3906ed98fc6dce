"""Structure of h-optimal graphs under a fixed complete h-coloring.

An h-optimal graph has chi = gamma = 3 and psi = h on exactly 2h - 2
vertices. Under any complete h-coloring its color classes are two
singletons and h - 2 pairs, and the pairs fit together in a very rigid
way. `structure_report` recovers that decomposition and evaluates each
structural property as a named boolean check.
"""

import dataclasses

import trichrome.canon
import trichrome.coloring
import trichrome.constructions
import trichrome.enumeration
import trichrome.graph
from trichrome.graph import bits, members

# checks that only say something once T holds at least two pairs
ENDGAME_CHECKS = ('nested_neighborhoods', 'couple_sides', 'couple_total', 'couple_phi', 'iota_phi')

@dataclasses.dataclass
class StructureReport:
    graph: trichrome.graph.Graph
    coloring: trichrome.coloring.Coloring
    h: int
    preconditions: dict
    checks: dict = dataclasses.field(default_factory=dict)
    singletons: int = 0
    pairs: list = dataclasses.field(default_factory=list)
    pair_types: list = dataclasses.field(default_factory=list)
    j_pairs: list = dataclasses.field(default_factory=list)
    t_pairs: list = dataclasses.field(default_factory=list)
    iotas: list = dataclasses.field(default_factory=list)
    nus: list = dataclasses.field(default_factory=list)

    @property
    def tau(self):
        return len(self.t_pairs)

    @property
    def xi(self):
        return len(self.j_pairs)

    @property
    def phi(self):
        return members(self.singletons)

    @property
    def ok(self):
        return all(self.preconditions.values()) and bool(self.checks) and all(self.checks.values())

    @property
    def failures(self):
        names = [name for name, value in self.preconditions.items() if not value]
        names += [name for name, value in self.checks.items() if not value]
        return names

    def as_json(self):
        def labels(mask):
            return [self.graph.label(v) for v in bits(mask)]

        return {
            'h': self.h,
            'ok': self.ok,
            'preconditions': dict(self.preconditions),
            'checks': dict(self.checks),
            'singletons': labels(self.singletons),
            'pairs': [labels(p) for p in self.pairs],
            'pair_types': list(self.pair_types),
            'tau': self.tau,
            'xi': self.xi,
            'iotas': [self.graph.label(v) for v in self.iotas],
            'nus': [self.graph.label(v) for v in self.nus],
        }

def _edges_between(g, a, b):
    return sum((g.adj[v] & b).bit_count() for v in bits(a))

def _pair_type(g, pair, phi):
    sub = trichrome.graph.induced_subgraph(g, pair | phi)
    if trichrome.canon.are_isomorphic(sub, trichrome.graph.Graph.path(4)):
        return 'P4'
    if trichrome.graph.clique_number(sub) >= 3:
        return 'K3'
    return None

def _is_chain(masks):
    ordered = sorted(masks, key=lambda m: m.bit_count())
    return all(a & ~b == 0 for a, b in zip(ordered, ordered[1:]))

def _preconditions(g, c, triple):
    h = c.k
    result = {
        'h_at_least_4': h >= 4,
        'order_2h_minus_2': g.n == 2 * h - 2,
        'connected': g.n > 0 and trichrome.graph.is_connected(g),
    }
    if not all(result.values()):
        result['triple_3_3_h'] = False
        return result
    if triple is None:
        chi, _ = trichrome.coloring.chromatic_number(g)
        gamma, _ = trichrome.coloring.grundy_number(g)
        same_psi = trichrome.enumeration.achromatic_equals(g, h)
        result['triple_3_3_h'] = (chi, gamma) == (3, 3) and same_psi
    else:
        result['triple_3_3_h'] = tuple(triple) == (3, 3, h)
    return result

def structure_report(g, c, triple=None):
    if c.host != g:
        raise ValueError('coloring belongs to a different graph')
    if not trichrome.coloring.is_complete(c):
        raise ValueError('structure report needs a complete coloring')

    report = StructureReport(g, c, c.k, _preconditions(g, c, triple))
    if not all(report.preconditions.values()):
        return report

    h = c.k
    checks = report.checks
    classes = c.classes
    singles = [cls for cls in classes if cls.bit_count() == 1]
    pairs = [cls for cls in classes if cls.bit_count() == 2]
    checks['two_singletons_and_pairs'] = len(singles) == 2 and len(pairs) == h - 2
    if not checks['two_singletons_and_pairs']:
        return report

    phi = singles[0] | singles[1]
    phi1, phi2 = members(phi)
    report.singletons = phi
    report.pairs = pairs
    everything = 0
    for p in pairs:
        everything |= p

    report.pair_types = [_pair_type(g, p, phi) for p in pairs]
    checks['pairs_p4_or_triangle'] = all(t is not None for t in report.pair_types)

    checks['one_edge_between_pairs'] = all(
        _edges_between(g, a, b) == 1
        for i, a in enumerate(pairs)
        for b in pairs[i + 1:]
    )

    isolated = 0
    for v in bits(everything):
        if not g.adj[v] & everything:
            isolated |= 1 << v
    apexes = [v for v in bits(everything) if g.adj[v] >> phi1 & 1 and g.adj[v] >> phi2 & 1]
    checks['triangle_apex_isolated'] = all(isolated >> v & 1 for v in apexes)

    report.j_pairs = [p for p in pairs if p & isolated]
    report.t_pairs = [p for p in pairs if not p & isolated]
    t = 0
    for p in report.t_pairs:
        t |= p
    for p in report.j_pairs:
        iota = (p & isolated & -(p & isolated)).bit_length() - 1
        report.iotas.append(iota)
        report.nus.append(members(p & ~(1 << iota))[0])

    sub = trichrome.graph.induced_subgraph(g, t)
    checks['T_bipartite'] = trichrome.graph.is_bipartite(sub) is not None
    checks['T_2K2_free'] = trichrome.enumeration.find_induced_reduced(sub, 2) is None
    checks['T_is_extended'] = trichrome.canon.are_isomorphic(sub, trichrome.constructions.extended_any(report.tau))
    checks['J_two_pairs'] = report.xi == 2

    checks.update(_endgame(g, report, t, phi1, phi2))
    return report

def _endgame(g, report, t, phi1, phi2):
    if report.tau < 2:
        return {name: True for name in ENDGAME_CHECKS}
    if report.xi != 2:
        return {name: False for name in ENDGAME_CHECKS}

    x = t & g.adj[phi2]
    y = t & g.adj[phi1]
    result = {}
    result['nested_neighborhoods'] = (
        (x | y) == t and not x & y and x.bit_count() == y.bit_count()
        and _is_chain([g.adj[v] & y for v in bits(x)])
        and _is_chain([g.adj[v] & x for v in bits(y)])
    )

    seen = [g.adj[nu] & t for nu in report.nus]
    result['couple_sides'] = all(not s & x or not s & y for s in seen)
    result['couple_total'] = sorted(seen) == sorted([x, y])

    def phi_ok(nu, s):
        # a couple seeing Y avoids phi1 and meets phi2, and the other way round
        if s == y:
            return not g.adj[nu] >> phi1 & 1 and bool(g.adj[nu] >> phi2 & 1)
        if s == x:
            return not g.adj[nu] >> phi2 & 1 and bool(g.adj[nu] >> phi1 & 1)
        return False
    result['couple_phi'] = all(phi_ok(nu, s) for nu, s in zip(report.nus, seen))

    result['iota_phi'] = any(g.adj[i] >> phi1 & 1 and g.adj[i] >> phi2 & 1 for i in report.iotas)
    return result
