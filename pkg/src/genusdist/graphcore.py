"""Multigraph data model, embedding representation, face tracing, and the
brute-force enumeration oracles for genus and Euler-genus distributions.

Darts: edge i contributes darts 2i (at its first endpoint) and 2i+1 (at its
second endpoint).  An embedding is a rotation (cyclic dart order per vertex)
plus one twist bit per co-tree edge of a fixed spanning tree; tree edges are
always untwisted.  This canonical form represents each of the
2^beta * prod (d_v - 1)! cellular embeddings of a connected graph exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .polyalg import LaurentPoly

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} embeddings, budget is {budget}")
        self.required = required
        self.budget = budget


class Graph:
    """Labeled multigraph with loops and parallel edges."""

    __slots__ = ("vertex_count", "edges", "dart_vertex", "vertex_darts", "degrees")

    def __init__(self, vertex_count: int, edges):
        if vertex_count < 1:
            raise ValueError("graph needs at least one vertex")
        edges = [tuple(e) for e in edges]
        for u, w in edges:
            if not (0 <= u < vertex_count and 0 <= w < vertex_count):
                raise ValueError(f"edge ({u},{w}) out of range for {vertex_count} vertices")
        self.vertex_count = vertex_count
        self.edges = tuple(edges)
        self.dart_vertex = []
        for u, w in edges:
            self.dart_vertex.append(u)
            self.dart_vertex.append(w)
        self.vertex_darts = [[] for _ in range(vertex_count)]
        for d, v in enumerate(self.dart_vertex):
            self.vertex_darts[v].append(d)
        self.degrees = [len(ds) for ds in self.vertex_darts]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edges)

    def beta(self) -> int:
        """Cycle-space dimension |E| - |V| + 1; requires connectivity."""
        self.require_connected()
        return len(self.edges) - self.vertex_count + 1

    def is_connected(self) -> bool:
        if self.vertex_count == 1:
            return True
        seen = {0}
        stack = [0]
        adj = [[] for _ in range(self.vertex_count)]
        for u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def components(self) -> list[list[int]]:
        adj = [[] for _ in range(self.vertex_count)]
        for u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        seen = [False] * self.vertex_count
        comps = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def require_connected(self):
        if not self.is_connected():
            raise ValueError("operation requires a connected graph")

    def spanning_tree(self) -> set[int]:
        """Edge ids of the lowest-index BFS spanning forest rooted at 0, 1, ..."""
        in_tree: set[int] = set()
        visited = [False] * self.vertex_count
        incident = [[] for _ in range(self.vertex_count)]
        for i, (u, w) in enumerate(self.edges):
            incident[u].append(i)
            if u != w:
                incident[w].append(i)
        for root in range(self.vertex_count):
            if visited[root]:
                continue
            visited[root] = True
            frontier = [root]
            while frontier:
                nxt = []
                for v in frontier:
                    for i in sorted(incident[v]):
                        u, w = self.edges[i]
                        other = w if u == v else u
                        if not visited[other]:
                            visited[other] = True
                            in_tree.add(i)
                            nxt.append(other)
                nxt.sort()
                frontier = nxt
        return in_tree

    def cotree_edges(self) -> list[int]:
        tree = self.spanning_tree()
        return [i for i in range(len(self.edges)) if i not in tree]

    def rotation_count(self) -> int:
        n = 1
        for d in self.degrees:
            if d > 1:
                n *= _factorial(d - 1)
        return n

    def __repr__(self):
        return f"Graph({self.vertex_count}, {list(self.edges)})"


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def build_graph(vertex_count: int, edges) -> Graph:
    return Graph(vertex_count, edges)


@dataclass
class GluingSpec:
    """Ordered vertex pairs (u_i -> w_i) defining a bijection between two
    disjoint vertex sets."""

    pairs: list[tuple[int, int]]

    def __post_init__(self):
        sources = [u for u, _ in self.pairs]
        targets = [w for _, w in self.pairs]
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            raise ValueError("gluing must be a bijection: repeated source or target")

    def sources(self) -> list[int]:
        return [u for u, _ in self.pairs]

    def targets(self) -> list[int]:
        return [w for _, w in self.pairs]

    def check_self_gluing(self, g: Graph):
        s, t = set(self.sources()), set(self.targets())
        if s & t:
            raise ValueError("self-gluing requires disjoint source and target vertex sets")
        for v in s | t:
            if not 0 <= v < g.vertex_count:
                raise ValueError(f"gluing vertex {v} out of range")

    @classmethod
    def parse(cls, text: str) -> "GluingSpec":
        """Parse 'glue U1>W1,U2>W2,...' (the 'glue ' prefix is optional)."""
        text = text.strip()
        if text.startswith("glue"):
            text = text[4:].strip()
        pairs = []
        if text:
            for chunk in text.split(","):
                u, _, w = chunk.partition(">")
                pairs.append((int(u), int(w)))
        return cls(pairs)

    def format(self) -> str:
        return ",".join(f"{u}>{w}" for u, w in self.pairs)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def build_named(kind: str, params: list[int]) -> Graph:
    """Construct a named graph family member with canonical labeling."""
    kind = kind.lower()
    if kind in ("doubled_cycle", "cn2"):
        (n,) = params
        return _multi_cycle(n, 2)
    if kind in ("tripled_cycle", "cn3"):
        (n,) = params
        return _multi_cycle(n, 3)
    if kind in ("doubled_path", "pn2"):
        (n,) = params
        if n < 1:
            raise ValueError("doubled path needs n >= 1")
        edges = []
        for i in range(n - 1):
            edges.append((i, i + 1))
            edges.append((i, i + 1))
        return Graph(n, edges)
    if kind == "path":
        (n,) = params
        if n < 1:
            raise ValueError("path needs n >= 1")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = params
        return _multi_cycle(n, 1)
    if kind == "bouquet":
        (k,) = params
        if k < 0:
            raise ValueError("bouquet needs k >= 0")
        return Graph(1, [(0, 0)] * k)
    if kind == "dipole":
        (k,) = params
        if k < 1:
            raise ValueError("dipole needs k >= 1")
        return Graph(2, [(0, 1)] * k)
    if kind == "ladder":
        (n,) = params
        if n < 1:
            raise ValueError("ladder needs n >= 1")
        # vertices x_i = 2i, y_i = 2i+1; rungs plus two rails
        edges = [(2 * i, 2 * i + 1) for i in range(n)]
        for i in range(n - 1):
            edges.append((2 * i, 2 * i + 2))
            edges.append((2 * i + 1, 2 * i + 3))
        return Graph(2 * n, edges)
    if kind == "half_open_ladder":
        (n,) = params
        if n < 1:
            raise ValueError("half-open ladder needs n >= 1")
        # ladder L_{n+1} with one end rung removed; the two freed vertices
        # become the pendants u = 0 and v = 1
        ladder = build_named("ladder", [n + 1])
        edges = [e for e in ladder.edges if e != (0, 1)]
        return Graph(ladder.vertex_count, edges)
    if kind == "grid":
        k, n = params
        if k < 1 or n < 1:
            raise ValueError("grid needs positive dimensions")
        edges = []
        for col in range(n):
            for row in range(k):
                v = col * k + row
                if row + 1 < k:
                    edges.append((v, v + 1))
                if col + 1 < n:
                    edges.append((v, v + k))
        return Graph(k * n, edges)
    raise ValueError(f"unknown named graph kind {kind!r}")


def _multi_cycle(n: int, multiplicity: int) -> Graph:
    if n < 1:
        raise ValueError("cycle needs n >= 1")
    edges = []
    for i in range(n):
        for _ in range(multiplicity):
            edges.append((i, (i + 1) % n))
    return Graph(n, edges)


def half_open_ladder_pendants(n: int) -> tuple[int, int]:
    """Pendant vertex labels (u, v) of build_named('half_open_ladder', [n])."""
    return (0, 1)


# ---------------------------------------------------------------------------
# Graph surgery
# ---------------------------------------------------------------------------


def bar_amalgamate(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Disjoint union of g and h plus one new edge {u, v}."""
    if not 0 <= u < g.vertex_count:
        raise ValueError(f"vertex {u} out of range in first graph")
    if not 0 <= v < h.vertex_count:
        raise ValueError(f"vertex {v} out of range in second graph")
    offset = g.vertex_count
    edges = list(g.edges) + [(a + offset, b + offset) for a, b in h.edges]
    edges.append((u, v + offset))
    return Graph(g.vertex_count + h.vertex_count, edges)


def bar_ring(parts: list[tuple[Graph, int, int]]) -> Graph:
    """Cyclically chain marked graphs (G_i, u_i, v_i) with new edges v_i -> u_{i+1}."""
    if not parts:
        raise ValueError("bar ring needs at least one part")
    for g, u, v in parts:
        if g.degrees[u] != 1 or g.degrees[v] != 1:
            raise ValueError("bar ring marks must be pendant vertices")
    offsets = []
    total = 0
    edges: list[tuple[int, int]] = []
    for g, _, _ in parts:
        offsets.append(total)
        total += g.vertex_count
    for (g, _, _), off in zip(parts, offsets):
        edges.extend((a + off, b + off) for a, b in g.edges)
    n = len(parts)
    for i in range(n):
        j = (i + 1) % n
        vi = parts[i][2] + offsets[i]
        uj = parts[j][1] + offsets[j]
        edges.append((vi, uj))
    return Graph(total, edges)


def amalgamate(g: Graph, h: Graph | None, spec: GluingSpec) -> Graph:
    """Vertex amalgamation: cross-graph when h is given, self-gluing otherwise.

    Cross mode identifies vertex u of g with vertex phi(u) of h; self mode
    identifies u with phi(u) inside g.  Vertices are renumbered compactly in
    order of their smallest original label (g before h in cross mode).
    """
    if h is not None:
        for u in spec.sources():
            if not 0 <= u < g.vertex_count:
                raise ValueError(f"gluing source {u} out of range")
        for w in spec.targets():
            if not 0 <= w < h.vertex_count:
                raise ValueError(f"gluing target {w} out of range")
        offset = g.vertex_count
        total = g.vertex_count + h.vertex_count
        union: list[int] = list(range(total))
        pairs = [(u, w + offset) for u, w in spec.pairs]
        edges = list(g.edges) + [(a + offset, b + offset) for a, b in h.edges]
    else:
        spec.check_self_gluing(g)
        total = g.vertex_count
        union = list(range(total))
        pairs = list(spec.pairs)
        edges = list(g.edges)

    def find(x):
        while union[x] != x:
            union[x] = union[union[x]]
            x = union[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            union[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(x) for x in range(total)})
    relabel = {r: i for i, r in enumerate(roots)}
    new_edges = [(relabel[find(a)], relabel[find(b)]) for a, b in edges]
    return Graph(len(roots), new_edges)


def blow_up(g: Graph, vertices) -> Graph:
    """Split each vertex in `vertices` into one fresh degree-1 vertex per dart.

    Edges (and dart slots) are preserved, so dart i of the result corresponds
    to dart i of the input.  The result may be disconnected.
    """
    vset = set(vertices)
    for v in vset:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"vertex {v} out of range")
    endpoint = list(g.dart_vertex)
    next_vertex = g.vertex_count
    for d in range(len(endpoint)):
        if endpoint[d] in vset:
            endpoint[d] = next_vertex
            next_vertex += 1
    kept = sorted(set(range(g.vertex_count)) - vset)
    relabel = {v: i for i, v in enumerate(kept)}
    for v in range(g.vertex_count, next_vertex):
        relabel[v] = len(relabel)
    edges = []
    for i in range(len(g.edges)):
        edges.append((relabel[endpoint[2 * i]], relabel[endpoint[2 * i + 1]]))
    return Graph(len(kept) + (next_vertex - g.vertex_count), edges)


def attach_ear(g: Graph, edge_id: int, kind: str) -> Graph:
    """Replace an edge by an eared path: open ears add a doubled middle edge,
    closed ears add a loop at the new midpoint."""
    if not 0 <= edge_id < len(g.edges):
        raise ValueError(f"edge {edge_id} out of range")
    u, w = g.edges[edge_id]
    edges = [e for i, e in enumerate(g.edges) if i != edge_id]
    if kind == "open":
        x = g.vertex_count
        y = g.vertex_count + 1
        edges.extend([(u, x), (x, y), (x, y), (y, w)])
        return Graph(g.vertex_count + 2, edges)
    if kind == "closed":
        x = g.vertex_count
        edges.extend([(u, x), (x, w), (x, x)])
        return Graph(g.vertex_count + 1, edges)
    raise ValueError(f"unknown ear kind {kind!r}")


def swapping(h: Graph, spec: GluingSpec, cut: list[int]) -> tuple[Graph, list[tuple[int, int]]]:
    """Cut a minimal edge cut, apply the self-gluing, and pair the new leaves.

    Each cut edge is split into two pendant edges; the fresh endpoint on the
    U1 side goes to N1, the U2-side one to N2, and psi pairs them by edge.
    """
    spec.check_self_gluing(h)
    cut_set = set(cut)
    for e in cut_set:
        if not 0 <= e < len(h.edges):
            raise ValueError(f"cut edge {e} out of range")
    u1, u2 = set(spec.sources()), set(spec.targets())
    if not _separates(h, cut_set, u1, u2):
        raise ValueError("cut does not separate the gluing sides")
    for e in cut_set:
        if _separates(h, cut_set - {e}, u1, u2):
            raise ValueError("cut is not minimal: a proper subset still separates")
    side1 = _reachable(h, cut_set, u1)
    next_vertex = h.vertex_count
    edges = []
    psi_raw = []
    for i, (a, b) in enumerate(h.edges):
        if i not in cut_set:
            edges.append((a, b))
            continue
        na, nb = next_vertex, next_vertex + 1
        next_vertex += 2
        edges.append((a, na))
        edges.append((b, nb))
        if a in side1:
            psi_raw.append((na, nb))
        else:
            psi_raw.append((nb, na))
    enlarged = Graph(next_vertex, edges)
    glued = amalgamate(enlarged, None, spec)
    # track the new-leaf labels through the compact relabeling
    union = list(range(next_vertex))

    def find(x):
        while union[x] != x:
            union[x] = union[union[x]]
            x = union[x]
        return x

    for a, b in spec.pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            union[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(x) for x in range(next_vertex)})
    relabel = {r: i for i, r in enumerate(roots)}
    psi = [(relabel[find(a)], relabel[find(b)]) for a, b in psi_raw]
    return glued, psi


def _separates(g: Graph, removed_edges: set[int], u1: set[int], u2: set[int]) -> bool:
    adj = [[] for _ in range(g.vertex_count)]
    for i, (a, b) in enumerate(g.edges):
        if i in removed_edges:
            continue
        adj[a].append(b)
        adj[b].append(a)
    seen = set(u1)
    stack = list(u1)
    while stack:
        v = stack.pop()
        if v in u2:
            return False
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return not (seen & u2)


def _reachable(g: Graph, removed_edges: set[int], start: set[int]) -> set[int]:
    adj = [[] for _ in range(g.vertex_count)]
    for i, (a, b) in enumerate(g.edges):
        if i in removed_edges:
            continue
        adj[a].append(b)
        adj[b].append(a)
    seen = set(start)
    stack = list(start)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


# ---------------------------------------------------------------------------
# Embeddings and face tracing
# ---------------------------------------------------------------------------


@dataclass
class EmbeddingRep:
    """One cellular embedding: rotation per vertex plus co-tree twist bits."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    twists: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        g = self.graph
        if len(self.rotation) != g.vertex_count:
            raise ValueError("rotation must list every vertex")
        for v, cyc in enumerate(self.rotation):
            if sorted(cyc) != sorted(g.vertex_darts[v]):
                raise ValueError(f"rotation at vertex {v} is not a permutation of its darts")
        tree = g.spanning_tree()
        for e, bit in self.twists.items():
            if bit not in (0, 1):
                raise ValueError("twist bits must be 0 or 1")
            if bit and e in tree:
                raise ValueError(f"tree edge {e} cannot be twisted")

    def twist_vector(self) -> list[int]:
        return [self.twists.get(e, 0) for e in range(len(self.graph.edges))]

    def is_orientable(self) -> bool:
        return not any(self.twists.values())


@dataclass
class FaceSet:
    """Face walks of an embedding as (dart, direction) state sequences.

    corner_face maps the vertex corner after dart d (the gap between d and
    its rotation successor) to the id of the face filling that corner.
    """

    walks: list[list[tuple[int, int]]]
    face_count: int
    state_face: dict[tuple[int, int], int]
    corner_face: dict[int, int] = field(default_factory=dict)

    @property
    def f(self) -> int:
        return self.face_count


def _succ_pred(graph: Graph, rotation) -> tuple[list[int], list[int]]:
    succ = [0] * graph.dart_count
    pred = [0] * graph.dart_count
    for cyc in rotation:
        k = len(cyc)
        for i, d in enumerate(cyc):
            succ[d] = cyc[(i + 1) % k]
            pred[d] = cyc[(i - 1) % k]
    return succ, pred


def trace_embedding(graph: Graph, rotation, twist_by_edge) -> FaceSet:
    """Face walks of (rotation, twist vector); twists need not be normalized.

    States are (dart, direction) pairs; from (d, f) the walk crosses the edge
    to the partner dart, flips direction on a twisted edge, then turns to the
    rotation successor (direction +1) or predecessor (direction -1).  Faces
    are orbit classes under walk reversal: a face is either one self-reversed
    orbit or a mirror pair of orbits.
    """
    succ, pred = _succ_pred(graph, rotation)
    twist = list(twist_by_edge)

    def step(state):
        d, f = state
        partner = d ^ 1
        f2 = -f if twist[d >> 1] else f
        nxt = succ[partner] if f2 == 1 else pred[partner]
        return (nxt, f2)

    def reverse(state):
        d, f = state
        if f == 1:
            return (pred[d], -1)
        return (succ[d], 1)

    all_states = [(d, f) for d in range(graph.dart_count) for f in (1, -1)]
    orbit_of: dict[tuple[int, int], int] = {}
    orbits: list[list[tuple[int, int]]] = []
    for s0 in all_states:
        if s0 in orbit_of:
            continue
        orbit = [s0]
        orbit_of[s0] = len(orbits)
        s = step(s0)
        while s != s0:
            orbit_of[s] = len(orbits)
            orbit.append(s)
            s = step(s)
        orbits.append(orbit)
    face_of_orbit: dict[int, int] = {}
    walks = []
    for i, orbit in enumerate(orbits):
        if i in face_of_orbit:
            continue
        mate = orbit_of[reverse(orbit[0])]
        face_id = len(walks)
        face_of_orbit[i] = face_id
        face_of_orbit[mate] = face_id
        walks.append(orbit if i <= mate else orbits[mate])
    state_face = {s: face_of_orbit[o] for s, o in orbit_of.items()}
    corner_face = {}
    for s, face in state_face.items():
        d, f = s
        partner = d ^ 1
        f2 = -f if twist[d >> 1] else f
        corner = partner if f2 == 1 else pred[partner]
        corner_face[corner] = face
    return FaceSet(walks=walks, face_count=len(walks), state_face=state_face,
                   corner_face=corner_face)


def trace_faces(graph: Graph, rep: EmbeddingRep) -> FaceSet:
    """Face walks of a canonical embedding representative."""
    graph.require_connected()
    return trace_embedding(graph, rep.rotation, rep.twist_vector())


def euler_genus_of_rep(graph: Graph, rep: EmbeddingRep) -> int:
    faces = trace_faces(graph, rep)
    return 2 - graph.vertex_count + graph.edge_count - faces.face_count


# ---------------------------------------------------------------------------
# Distribution containers
# ---------------------------------------------------------------------------


@dataclass
class EmbeddingDistribution:
    """Coefficient vector of embedding counts indexed by genus or Euler-genus."""

    kind: str  # "genus" | "euler-genus" | "crosscap"
    coeffs: list[int]
    orientable: list[int] | None = None

    def poly(self) -> LaurentPoly:
        return LaurentPoly({i: c for i, c in enumerate(self.coeffs) if c})

    def total(self) -> int:
        return sum(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, EmbeddingDistribution):
            return self.kind == other.kind and self.poly() == other.poly()
        return NotImplemented


def crosscap_distribution(euler: EmbeddingDistribution) -> EmbeddingDistribution:
    """Crosscap-number distribution: Euler counts minus the orientable slice."""
    if euler.orientable is None:
        raise ValueError("euler distribution must carry its orientable slice")
    coeffs = list(euler.coeffs)
    for g, c in enumerate(euler.orientable):
        coeffs[2 * g] -= c
    if coeffs and coeffs[0] != 0:
        raise ValueError("crosscap distribution has no Euler-genus-0 part")
    return EmbeddingDistribution(kind="crosscap", coeffs=coeffs)


# ---------------------------------------------------------------------------
# Enumeration oracles
# ---------------------------------------------------------------------------


def _rotation_choices(graph: Graph):
    """Per-vertex rotations: lowest dart first, lexicographic over the rest."""
    per_vertex = []
    for darts in graph.vertex_darts:
        darts = sorted(darts)
        if not darts:
            per_vertex.append([()])
        elif len(darts) == 1:
            per_vertex.append([tuple(darts)])
        else:
            head, rest = darts[0], darts[1:]
            per_vertex.append([(head,) + p for p in itertools.permutations(rest)])
    return per_vertex


def iter_rotations(graph: Graph):
    """All rotation systems in the canonical deterministic order."""
    for combo in itertools.product(*_rotation_choices(graph)):
        yield combo


def _face_count_orientable(graph: Graph, succ) -> int:
    """Number of cycles of sigma∘tau on darts (all twists zero)."""
    n = graph.dart_count
    seen = bytearray(n)
    faces = 0
    for d0 in range(n):
        if seen[d0]:
            continue
        faces += 1
        d = d0
        while not seen[d]:
            seen[d] = 1
            d = succ[d ^ 1]
    return faces


def _face_count_signed(graph: Graph, succ, pred, twist_mask, cotree) -> int:
    """Face count of a twisted embedding via signed dart cycles.

    Signed darts are encoded 2d (positive) / 2d+1 (negative); the face
    permutation has exactly two cycles per face, so the count is halved.
    """
    n = graph.dart_count
    twisted = bytearray(len(graph.edges))
    for bit, e in enumerate(cotree):
        if twist_mask >> bit & 1:
            twisted[e] = 1
    perm = [0] * (2 * n)
    for d in range(n):
        partner = d ^ 1
        if twisted[d >> 1]:
            # crossing flips sign: +d -> -succ-direction of partner
            perm[2 * d] = 2 * pred[partner] + 1
            perm[2 * d + 1] = 2 * succ[partner]
        else:
            perm[2 * d] = 2 * succ[partner]
            perm[2 * d + 1] = 2 * pred[partner] + 1
    seen = bytearray(2 * n)
    cycles = 0
    for s0 in range(2 * n):
        if seen[s0]:
            continue
        cycles += 1
        s = s0
        while not seen[s]:
            seen[s] = 1
            s = perm[s]
    assert cycles % 2 == 0
    return cycles // 2


def genus_distribution_oracle(graph: Graph, budget: int = DEFAULT_BUDGET) -> EmbeddingDistribution:
    """Exact genus polynomial by enumerating all rotation systems."""
    graph.require_connected()
    required = graph.rotation_count()
    if required > budget:
        raise BudgetExceeded(required, budget)
    beta = graph.beta()
    counts = [0] * (beta // 2 + 1)
    v, e = graph.vertex_count, graph.edge_count
    for rotation in iter_rotations(graph):
        succ, _ = _succ_pred(graph, rotation)
        f = _face_count_orientable(graph, succ)
        eg = 2 - v + e - f
        assert eg % 2 == 0 and 0 <= eg <= beta
        counts[eg // 2] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return EmbeddingDistribution(kind="genus", coeffs=counts)


def euler_distribution_oracle(graph: Graph, budget: int = DEFAULT_BUDGET) -> EmbeddingDistribution:
    """Exact Euler-genus polynomial over all (rotation, co-tree twist) reps.

    Also records the orientable sub-distribution (all twists zero), indexed
    by genus.
    """
    graph.require_connected()
    beta = graph.beta()
    required = graph.rotation_count() << beta
    if required > budget:
        raise BudgetExceeded(required, budget)
    cotree = graph.cotree_edges()
    counts = [0] * (beta + 1)
    orientable = [0] * (beta // 2 + 1)
    v, e = graph.vertex_count, graph.edge_count
    for rotation in iter_rotations(graph):
        succ, pred = _succ_pred(graph, rotation)
        for mask in range(1 << beta):
            f = _face_count_signed(graph, succ, pred, mask, cotree)
            eg = 2 - v + e - f
            assert 0 <= eg <= beta
            counts[eg] += 1
            if mask == 0:
                orientable[eg // 2] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    while len(orientable) > 1 and orientable[-1] == 0:
        orientable.pop()
    return EmbeddingDistribution(kind="euler-genus", coeffs=counts, orientable=orientable)


def iter_embeddings(graph: Graph, budget: int = DEFAULT_BUDGET):
    """Yield every canonical embedding as an EmbeddingRep."""
    graph.require_connected()
    beta = graph.beta()
    required = graph.rotation_count() << beta
    if required > budget:
        raise BudgetExceeded(required, budget)
    cotree = graph.cotree_edges()
    for rotation in iter_rotations(graph):
        for mask in range(1 << beta):
            twists = {e: (mask >> bit) & 1 for bit, e in enumerate(cotree) if (mask >> bit) & 1}
            yield EmbeddingRep(graph=graph, rotation=rotation, twists=twists)
