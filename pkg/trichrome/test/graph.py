import itertools

import networkx

import trichrome.canon
import trichrome.constructions
import trichrome.graph
import trichrome.graph6
import trichrome.test
from trichrome.graph import Graph, vertex_set

def two_k2():
    return Graph.from_edges(4, [(0, 1), (2, 3)])

class InducedSubgraph(trichrome.test.Check):
    CASES = [
        (Graph.complete(4), [0, 1, 2], Graph.complete(3)),
        (Graph.cycle(5), [], Graph.empty(0)),
        (Graph.cycle(6), [0, 2, 4], Graph.empty(3)),
        (Graph.path(4), [1, 2, 3], Graph.path(3)),
    ]

    def check(self, case):
        g, s, expected = case
        self.assert_eq('G[{}]'.format(s), expected, trichrome.graph.induced_subgraph(g, vertex_set(s)))

class InducedSubgraphErrors(trichrome.test.Check):
    def run(self):
        self.assert_raises('vertex 4 of K4', ValueError, trichrome.graph.induced_subgraph, Graph.complete(4), 1 << 4)
        self.assert_raises('negative vertex', ValueError, vertex_set, [-1])

class InducedSubgraphComposes(trichrome.test.Check):
    def run(self):
        for _ in range(20):
            g = Graph.random(9, 0.5, self.rng)
            a = vertex_set(v for v in range(g.n) if self.rng.random() < 0.7)
            inside = trichrome.graph.members(a)
            chosen = [i for i in range(len(inside)) if self.rng.random() < 0.5]
            b = vertex_set(inside[i] for i in chosen)
            twice = trichrome.graph.induced_subgraph(trichrome.graph.induced_subgraph(g, a), vertex_set(chosen))
            self.assert_eq('G[A][B\']', trichrome.graph.induced_subgraph(g, b), twice)

class Join(trichrome.test.Check):
    CASES = [
        (Graph.complete(2), Graph.complete(1), 3, 3),
        (Graph.empty(3), Graph.empty(3), 6, 9),
        (Graph.cycle(5), Graph.complete(1), 6, 10),
    ]

    def check(self, case):
        g, h, n, m = case
        joined = trichrome.graph.join(g, h)
        self.assert_eq('vertices of join', n, joined.n)
        self.assert_eq('edges of join', m, joined.m)

    def run(self):
        super().run()
        self.assert_eq('join(K2, K1)', Graph.complete(3), trichrome.graph.join(Graph.complete(2), Graph.complete(1)))
        self.assert_true('join of two stable triples is K33', trichrome.canon.are_isomorphic(
            trichrome.graph.join(Graph.empty(3), Graph.empty(3)), Graph.complete_bipartite(3, 3)))
        for _ in range(20):
            g = Graph.random(self.rng.randint(0, 8), 0.4, self.rng)
            h = Graph.random(self.rng.randint(0, 8), 0.4, self.rng)
            joined = trichrome.graph.join(g, h)
            self.assert_eq('random join vertices', g.n + h.n, joined.n)
            self.assert_eq('random join edges', g.m + h.m + g.n * h.n, joined.m)
        self.assert_raises('join past capacity', trichrome.graph.CapacityError, trichrome.graph.join, Graph.empty(40), Graph.empty(30))

class Connected(trichrome.test.Check):
    CASES = [
        (Graph.path(4), True),
        (two_k2(), False),
        (Graph.complete(1), True),
        (Graph.empty(2), False),
    ]

    def check(self, case):
        g, expected = case
        self.assert_eq('connectivity of {!r}'.format(g), expected, trichrome.graph.is_connected(g))

    def run(self):
        super().run()
        self.assert_raises('connectivity of the empty graph', ValueError, trichrome.graph.is_connected, Graph.empty(0))

class Bipartite(trichrome.test.Check):
    CASES = [
        (Graph.cycle(6), True),
        (Graph.complete(3), False),
        (trichrome.constructions.g_star(5, 7), True),
        (Graph.cycle(5), False),
        (Graph.empty(3), True),
    ]

    def check(self, case):
        g, expected = case
        sides = trichrome.graph.is_bipartite(g)
        self.assert_eq('bipartite {!r}'.format(g), expected, sides is not None)
        if sides is not None:
            a, b = sides
            self.assert_eq('sides partition', g.all, a | b)
            self.assert_eq('sides disjoint', 0, a & b)
            self.assert_true('side a stable', trichrome.graph.is_stable(g, a))
            self.assert_true('side b stable', trichrome.graph.is_stable(g, b))

class CliqueNumber(trichrome.test.Check):
    CASES = [
        (Graph.complete(5), 5),
        (Graph.cycle(5), 2),
        (trichrome.constructions.l_graph(9, 1), 3),
        (Graph.empty(4), 1),
    ]

    def check(self, case):
        g, expected = case
        self.assert_eq('omega of {!r}'.format(g), expected, trichrome.graph.clique_number(g))

    def run(self):
        super().run()
        l = trichrome.constructions.l_graph(9, 1)
        triangle = l.vertices('u7', 'q1', 'q2')
        self.assert_eq('triangle in L', 3, trichrome.graph.induced_subgraph(l, triangle).m)

def brute_maximal_stable(g):
    stable = [s for s in range(1 << g.n) if trichrome.graph.is_stable(g, s)]
    return sorted(s for s in stable if all(not trichrome.graph.is_stable(g, s | (1 << v)) for v in range(g.n) if not s >> v & 1))

class MaximalStableSets(trichrome.test.Check):
    CASES = [
        (Graph.complete(3), [0b001, 0b010, 0b100]),
        (Graph.path(3), [0b010, 0b101]),
        (Graph.empty(2), [0b11]),
    ]

    def check(self, case):
        g, expected = case
        self.assert_eq('maximal stable sets of {!r}'.format(g), expected, trichrome.graph.maximal_stable_sets(g))

    def run(self):
        super().run()
        for _ in range(15):
            g = Graph.random(self.rng.randint(1, 12), self.rng.uniform(0.1, 0.7), self.rng)
            found = trichrome.graph.maximal_stable_sets(g)
            self.assert_eq('maximal stable sets of random {!r}'.format(g), brute_maximal_stable(g), found)
            for s in found:
                self.assert_true('stable and dominating', trichrome.graph.is_dominating(g, s, g.all))

class Dominating(trichrome.test.Check):
    CASES = [
        (Graph.complete(3), [0], [0, 1, 2], True),
        (two_k2(), [0], [2, 3], False),
        (Graph.path(4), [1, 3], [0, 1, 2, 3], True),
        (Graph.path(4), [0], [2], False),
    ]

    def check(self, case):
        g, d, target, expected = case
        self.assert_eq('{} dominates {}'.format(d, target), expected, trichrome.graph.is_dominating(g, vertex_set(d), vertex_set(target)))

class Graph6Examples(trichrome.test.Check):
    CASES = [
        (Graph.complete(3), 'Bw'),
        (Graph.empty(1), '@'),
        (Graph.complete(4), 'C~'),
        (Graph.empty(0), '?'),
    ]

    def check(self, case):
        g, text = case
        self.assert_eq('graph6 of {!r}'.format(g), text, trichrome.graph6.write_graph6(g))
        self.assert_eq('parse {}'.format(text), g, trichrome.graph6.parse_graph6(text))

class Graph6MatchesNetworkx(trichrome.test.Check):
    def run(self):
        for nx_graph in networkx.graph_atlas_g()[1:300]:
            expected = networkx.to_graph6_bytes(nx_graph, header=False).strip().decode('ascii')
            self.assert_eq('graph6 of atlas graph', expected, trichrome.graph6.write_graph6(trichrome.test.from_networkx(nx_graph)))
        for n in (62, 63, 64):
            nx_graph = networkx.gnp_random_graph(n, 0.3, seed=n)
            expected = networkx.to_graph6_bytes(nx_graph, header=False).strip().decode('ascii')
            self.assert_eq('graph6 of G({}, 0.3)'.format(n), expected, trichrome.graph6.write_graph6(trichrome.test.from_networkx(nx_graph)))

class Graph6RoundTrip(trichrome.test.Check):
    def run(self):
        for _ in range(1000):
            g = Graph.random(self.rng.randint(0, 64), self.rng.random(), self.rng)
            text = trichrome.graph6.write_graph6(g)
            self.assert_eq('round trip of {!r}'.format(g), g, trichrome.graph6.parse_graph6(text))
        self.assert_eq('header and newline', Graph.complete(3), trichrome.graph6.parse_graph6('>>graph6<<Bw\n'))

class Graph6Errors(trichrome.test.Check):
    CASES = [
        ('', 0),
        ('B', 1),
        ('Bww', 2),
        ('Bx', 1),
        ('B ', 1),
        ('~?', 2),
    ]

    def check(self, case):
        text, offset = case
        try:
            trichrome.graph6.parse_graph6(text)
        except trichrome.graph6.Graph6Error as e:
            self.assert_eq('offset for {!r}'.format(text), offset, e.offset)
            return
        raise RuntimeError('parsed malformed graph6 {!r}'.format(text))

    def run(self):
        super().run()
        too_big = trichrome.graph6.encode_size(65) + '?' * 347
        self.assert_raises('65 vertices', trichrome.graph.CapacityError, trichrome.graph6.parse_graph6, too_big)

class CanonicalExamples(trichrome.test.Check):
    def run(self):
        p4 = Graph.path(4)
        # the path 2-0-3-1
        other = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
        self.assert_eq('form of relabeled P4', trichrome.canon.canonical_form(p4), trichrome.canon.canonical_form(other))

        c6 = Graph.cycle(6)
        two_triangles = trichrome.graph.disjoint_union(Graph.complete(3), Graph.complete(3))
        self.assert_true('C6 and 2K3 differ', trichrome.canon.canonical_form(c6) != trichrome.canon.canonical_form(two_triangles))

        forms = {trichrome.canon.canonical_form(g) for g in trichrome.test.all_labeled(4)}
        self.assert_eq('classes of 4-vertex graphs', 11, len(forms))

        form = trichrome.canon.canonical_form(trichrome.constructions.g_star(4, 6))
        self.assert_eq('hex round trip', form, trichrome.canon.CanonicalForm.from_hex(form.hex()))
        self.assert_true('form graph', trichrome.canon.are_isomorphic(form.graph(), trichrome.constructions.g_star(4, 6)))

        self.assert_raises('17 vertices', trichrome.graph.CapacityError, trichrome.canon.canonical_form, Graph.empty(17))

class CanonicalInvariant(trichrome.test.Check):
    def run(self):
        for g in trichrome.test.atlas(5):
            form = trichrome.canon.canonical_form(g)
            for order in itertools.permutations(range(g.n)):
                self.assert_eq('form under permutation', form, trichrome.canon.canonical_form(g.relabel(order)))
        for g in trichrome.test.atlas(7, 6):
            form = trichrome.canon.canonical_form(g)
            for _ in range(3):
                self.assert_eq('form under random permutation', form, trichrome.canon.canonical_form(trichrome.test.permuted(g, self.rng)))

class CanonicalDistinct(trichrome.test.Check):
    def run(self):
        graphs = list(trichrome.test.atlas(7))
        forms = {trichrome.canon.canonical_form(g) for g in graphs}
        self.assert_eq('distinct forms of atlas graphs', len(graphs), len(forms))

class Isomorphic(trichrome.test.Check):
    CASES = [
        (Graph.complete_bipartite(3, 3), Graph.cycle(6), False),
        (trichrome.constructions.basic_bipartite(3), Graph.path(4), True),
        (trichrome.constructions.reduced_graph(3), Graph.cycle(6), True),
        (Graph.cycle(6), trichrome.graph.disjoint_union(Graph.complete(3), Graph.complete(3)), False),
    ]

    def check(self, case):
        g, h, expected = case
        self.assert_eq('{!r} ~ {!r}'.format(g, h), expected, trichrome.canon.are_isomorphic(g, h))

    def run(self):
        super().run()
        for _ in range(40):
            n = self.rng.randint(1, 6)
            g = Graph.random(n, 0.5, self.rng)
            h = Graph.random(n, 0.5, self.rng) if self.rng.random() < 0.5 else trichrome.test.permuted(g, self.rng)
            self.assert_eq('agrees with permutation search', trichrome.test.brute_isomorphic(g, h), trichrome.canon.are_isomorphic(g, h))

class SameOrbit(trichrome.test.Check):
    def run(self):
        p4 = Graph.path(4)
        self.assert_true('P4 ends', trichrome.canon.same_orbit(p4, 0, 3))
        self.assert_true('P4 middle', trichrome.canon.same_orbit(p4, 1, 2))
        self.assert_true('P4 end vs middle', not trichrome.canon.same_orbit(p4, 0, 1))
        star = Graph.complete_bipartite(1, 4)
        self.assert_true('star leaves', trichrome.canon.same_orbit(star, 1, 4))
        self.assert_true('star center', not trichrome.canon.same_orbit(star, 0, 1))

class Labels(trichrome.test.Check):
    def run(self):
        b = trichrome.constructions.basic_bipartite(3)
        self.assert_eq('labels', ('u1', 'u2', 'w2', 'w3'), b.labels)
        self.assert_eq('labels ignored by equality', Graph(b.n, b.adj), b)
        self.assert_eq('label lookup', 2, b.vertex('w2'))
        self.assert_eq('labels survive induced subgraphs', ('u1', 'w3'), trichrome.graph.induced_subgraph(b, b.vertices('u1', 'w3')).labels)
