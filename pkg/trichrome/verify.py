import dataclasses
import random

import trichrome.canon
import trichrome.coloring
import trichrome.constructions
import trichrome.enumeration
import trichrome.graph
import trichrome.structure
from trichrome.constructions import Triple
from trichrome.graph import CapacityError

@dataclasses.dataclass
class Verdict:
    claim: str
    expected: object = None
    computed: object = None
    passed: bool = False
    required: bool = True
    skipped: str | None = None

    @classmethod
    def compare(cls, claim, expected, computed):
        return cls(claim, expected, computed, expected == computed)

    @classmethod
    def skip(cls, claim, reason='capacity', required=True):
        return cls(claim, required=required, skipped=reason)

    @property
    def incomplete(self):
        return self.skipped is not None and self.required

    def as_json(self):
        if self.skipped is not None:
            return {'claim': self.claim, 'skipped': self.skipped, 'required': self.required}
        return {
            'claim': self.claim,
            'expected': self.expected,
            'computed': self.computed,
            'pass': self.passed,
        }

def minorder(t, workers=1, progress=False):
    claim = 'min order of {}'.format(t)
    try:
        result = trichrome.enumeration.verify_min_order(t, workers, progress)
    except CapacityError:
        return Verdict.skip(claim)
    return Verdict(claim, result.formula, result.search_min, result.passed)

def hoptimal(h, workers=1, progress=False, extended=False):
    claim = 'number of {}-optimal graphs'.format(h)
    if not 4 <= h <= 6:
        yield Verdict.skip(claim)
        return
    if h == 6 and not extended:
        yield Verdict.skip(claim, 'extended', required=False)
        return

    found = trichrome.enumeration.h_optimal_graphs(h, workers, progress)
    yield Verdict.compare(claim, trichrome.enumeration.H_OPTIMAL_COUNTS[h], len(found))

    forms = {trichrome.canon.canonical_form(g) for g in found}
    for variant in (1, 2):
        l = trichrome.constructions.l_graph(h, variant)
        yield Verdict.compare('L{} is {}-optimal'.format(variant, h), True, trichrome.canon.canonical_form(l) in forms)

    reports = structure_battery(found)
    yield Verdict.compare('structure of {}-optimal graphs, failing (graph, coloring) pairs'.format(h), 0, reports)

def structure_battery(graphs):
    failures = 0
    for g in graphs:
        h = (g.n + 2) // 2
        triple = (3, 3, h)
        for c in trichrome.enumeration.all_complete_colorings(g, h):
            if not trichrome.structure.structure_report(g, c, triple).ok:
                failures += 1
    return failures

def _triple(g):
    report = trichrome.coloring.analyze(g)
    return list(report.triple)

def gstar_sweep(top=8):
    for h in range(3, top + 1):
        for g in range(3, h + 1):
            graph = trichrome.constructions.g_star(g, h)
            claim = 'invariants of G(2,{},{}) on {} vertices'.format(g, h, graph.n)
            yield Verdict.compare(claim, [2, g, h], _triple(graph))

def realizer_sweep(top=12):
    bad = []
    for t in realizable_triples(top):
        g = trichrome.constructions.realize(t)
        n = trichrome.constructions.min_order(t)
        if g.n != n or not trichrome.graph.is_connected(g) or _triple(g) != list(t.as_tuple()):
            bad.append(str(t))
    return Verdict.compare('realize(t) on min_order(t) vertices, order <= {}'.format(top), [], bad)

def realizable_triples(top):
    # every realizable triple whose min order is at most top
    for h in range(2, top + 1):
        for g in range(2, h + 1):
            for f in range(2, g + 1):
                t = Triple(f, g, h)
                if t.realizable and trichrome.constructions.min_order(t) <= top:
                    yield t

def minorder_suite(top=8, workers=1, progress=False):
    for t in realizable_triples(top):
        yield minorder(t, workers, progress)

def witness_sweep(top=8):
    bad = []
    for h in range(3, top + 1):
        for g in range(3, h + 1):
            c = trichrome.constructions.grundy_witness_gstar(g, h)
            if c.k != g or not trichrome.coloring.is_grundy(c):
                bad.append('grundy G(2,{},{})'.format(g, h))
            c = trichrome.constructions.achromatic_witness_gstar(h, g)
            if c.k != h or not trichrome.coloring.is_complete(c):
                bad.append('achromatic G(2,{},{})'.format(g, h))
    for h in range(4, top + 2):
        for variant in (1, 2):
            c = trichrome.constructions.achromatic_witness_l(h, variant)
            if c.k != h or not trichrome.coloring.is_complete(c):
                bad.append('achromatic L{} h={}'.format(variant, h))
            c = trichrome.constructions.chromatic_witness_l(h, variant)
            if c.k != 3 or not trichrome.coloring.is_complete(c):
                bad.append('chromatic L{} h={}'.format(variant, h))
    return Verdict.compare('witness colorings verify', [], bad)

def reduced_sweep(top=7):
    bad = []
    for h in range(3, top + 1):
        for g in range(3, h + 1):
            graph = trichrome.constructions.g_star(g, h)
            for theta in range(g - 1, h):
                if trichrome.enumeration.find_induced_reduced(graph, theta) is not None:
                    bad.append('G(2,{},{}) theta={}'.format(g, h, theta))
    return Verdict.compare('no induced R_theta in G(2,g,h) for theta >= g-1', [], bad)

def stable_sweep(top=10):
    bad = []
    for ell in range(2, top + 1):
        g = trichrome.constructions.extended_graph(ell)
        expected = sorted(
            g.vertices(*(['w{}'.format(i) for i in range(1, n + 1)] + ['u{}'.format(i) for i in range(n, ell + 1)]))
            for n in range(1, ell + 1)
        )
        if trichrome.graph.maximal_stable_sets(g) != expected:
            bad.append(ell)
    return Verdict.compare('maximal stable sets of extended graphs', [], bad)

def small_connected(top=7):
    for n in range(1, top + 1):
        yield from trichrome.enumeration.connected_graphs(n)

def oracle_sweep(samples=1000):
    bad = 0
    for g in small_connected(7):
        gamma, _ = trichrome.coloring.grundy_number(g)
        if gamma != trichrome.coloring.grundy_by_firstfit(g):
            bad += 1
    rng = random.Random(8)
    for _ in range(samples):
        g = trichrome.graph.Graph.random(8, rng.uniform(0.2, 0.8), rng)
        gamma, _ = trichrome.coloring.grundy_number(g)
        if gamma != trichrome.coloring.grundy_by_firstfit(g):
            bad += 1
    return Verdict.compare('grundy recursion disagrees with first-fit', 0, bad)

def pi_sweep(top=7):
    bad = 0
    for n in range(1, top + 1):
        for g in trichrome.enumeration.all_graphs(n):
            gamma, _ = trichrome.coloring.grundy_number(g)
            if trichrome.coloring.has_property_pi(g) != (gamma <= 2):
                bad += 1
    return Verdict.compare('property pi disagrees with grundy <= 2', 0, bad)

def interpolation_sweep(samples):
    rng = random.Random(9)
    bad = 0
    for _ in range(samples):
        g = trichrome.graph.Graph.random_connected(rng.randint(1, 9), rng)
        chi, _ = trichrome.coloring.chromatic_number(g)
        psi, _ = trichrome.coloring.achromatic_number(g)
        for k in range(1, g.n + 1):
            present = trichrome.coloring.complete_coloring_with(g, k) is not None
            if present != (chi <= k <= psi):
                bad += 1
                break
    return Verdict.compare('complete colorings exist exactly for chi <= k <= psi', 0, bad)

def join_sweep(samples):
    rng = random.Random(10)
    apex = trichrome.graph.Graph.complete(1)
    bad = 0
    for _ in range(samples):
        g = trichrome.graph.Graph.random(rng.randint(1, 8), rng.uniform(0.2, 0.8), rng)
        lifted = _triple(trichrome.graph.join(g, apex))
        if lifted != [x + 1 for x in _triple(g)]:
            bad += 1
    return Verdict.compare('joining K1 raises each invariant by one', 0, bad)

def acceptance_suite(workers=1, progress=False, extended=False):
    yield from gstar_sweep()
    yield realizer_sweep()
    yield from minorder_suite(workers=workers, progress=progress)
    for h in (4, 5, 6):
        yield from hoptimal(h, workers, progress, extended)
    yield pi_sweep()
    yield oracle_sweep()
    yield interpolation_sweep(500)
    yield join_sweep(1000)
    yield reduced_sweep()
    yield stable_sweep()
    yield witness_sweep()
