"""Transfer-operator engine for H-linear, H-circular, and capped graph
families: boundary states, the step operator, series production, rational
generating functions, and transfer-matrix extraction.

A family is generated from a base graph H with a self-gluing phi: U1 -> U2 by
repeated vertex amalgamation (each new copy's U2 is merged onto the previous
graph's unmatched U1).  The engine tracks the face element of the blow-up of
G_n at both unmatched boundaries, projected to the boundary darts.  Boundary
darts are labeled H-dart + OFFSET: the first copy's U2 darts ("left") live at
offset D, the last copy's U1 darts ("right") at offset 2D, and cap darts at
offset 3D, where D is H's dart count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphcore import BudgetExceeded, DEFAULT_BUDGET, Graph, GluingSpec, blow_up
from .groupring import (
    GroupRingElem,
    cyclic_sum_element,
    face_element,
    face_proj,
    genus_poly_from_face_element,
    ring_multiply,
)
from .polyalg import LaurentPoly, RationalGF, SeriesPrefix, reconstruct_rational_gf


@dataclass
class FamilySpec:
    """Validated description of an H-linear / H-circular / capped family."""

    h: Graph
    glue: GluingSpec
    kind: str  # "linear" | "circular" | "capped"
    mode: str  # "genus" | "euler"
    cap_graph: Graph | None = None
    cap_glue: GluingSpec | None = None
    cap_side: str = "left"
    budget: int = DEFAULT_BUDGET
    _engine: "TransferEngine" = field(default=None, repr=False, compare=False)

    def engine(self) -> "TransferEngine":
        if self._engine is None:
            object.__setattr__(self, "_engine", TransferEngine(self))
        return self._engine

    def index_graph_counts(self, n: int) -> tuple[int, int]:
        """(vertices, edges) of the graph at series index n."""
        h, u1 = self.h, self.glue.sources()
        v = n * h.vertex_count - (n - 1) * len(u1)
        e = n * h.edge_count
        if self.kind == "circular":
            v -= len(u1)
        elif self.kind == "capped":
            v += self.cap_graph.vertex_count - len(self.cap_glue.pairs)
            e += self.cap_graph.edge_count
        return v, e

    def index_description(self, n: int) -> str:
        v, e = self.index_graph_counts(n)
        return f"t^{n} <-> {self.kind} member with {v} vertices, {e} edges"


def make_family(
    h: Graph,
    glue: GluingSpec,
    kind: str = "linear",
    mode: str = "genus",
    cap_graph: Graph | None = None,
    cap_glue: GluingSpec | None = None,
    cap_side: str = "left",
    budget: int = DEFAULT_BUDGET,
) -> FamilySpec:
    """Validate a family description and precompute its boundary face element."""
    if kind not in ("linear", "circular", "capped"):
        raise ValueError(f"unknown family kind {kind!r}")
    if mode not in ("genus", "euler"):
        raise ValueError(f"unknown family mode {mode!r}")
    if not glue.pairs:
        raise ValueError("family gluing must be nonempty")
    glue.check_self_gluing(h)
    h.require_connected()
    if kind == "capped":
        if cap_graph is None or cap_glue is None:
            raise ValueError("capped family needs a cap graph and cap gluing")
        if not cap_glue.pairs:
            raise ValueError("cap gluing must be nonempty")
        if cap_side not in ("left", "right"):
            raise ValueError("cap side must be 'left' or 'right'")
        boundary = glue.targets() if cap_side == "left" else glue.sources()
        for u in cap_glue.sources():
            if u not in boundary:
                raise ValueError(f"cap gluing source {u} is not an unmatched gluing vertex")
        for w in cap_glue.targets():
            if not 0 <= w < cap_graph.vertex_count:
                raise ValueError(f"cap gluing target {w} out of range")
    spec = FamilySpec(
        h=h, glue=glue, kind=kind, mode=mode,
        cap_graph=cap_graph, cap_glue=cap_glue, cap_side=cap_side, budget=budget,
    )
    spec.engine()  # force construction so errors surface here
    return spec


@dataclass
class TransferState:
    """Boundary group-ring state A_n of a family."""

    elem: GroupRingElem
    index: int


class TransferEngine:
    """Cached machinery for one family: A_1, the memoized step, completions."""

    def __init__(self, spec: FamilySpec):
        self.spec = spec
        h = spec.h
        self.signed = spec.mode == "euler"
        mode = "euler" if self.signed else "orientable"
        d = h.dart_count
        self.left_off = d
        self.right_off = 2 * d
        self.cap_off = 3 * d
        u1, u2 = spec.glue.sources(), spec.glue.targets()
        self.u1_darts = sorted(x for v in u1 for x in h.vertex_darts[v])
        self.u2_darts = sorted(x for v in u2 for x in h.vertex_darts[v])
        boundary = sorted(self.u1_darts + self.u2_darts)

        blown = blow_up(h, set(u1) | set(u2))
        phi = face_element(blown, mode, budget=spec.budget)
        self.phi_boundary = face_proj(phi, boundary)

        # merged-vertex dart lists for one amalgamation step: old right U1
        # vertex u (darts at offset right_off) fuses with the new copy's
        # vertex phi(u) (raw darts)
        self.step_merge_lists = []
        for u, w in spec.glue.pairs:
            darts = [x + self.right_off for x in h.vertex_darts[u]]
            darts += list(h.vertex_darts[w])
            self.step_merge_lists.append(sorted(darts))
        self.c_step = cyclic_sum_element(self.step_merge_lists, self.signed)
        self.step_core = ring_multiply(self.c_step, self.phi_boundary)

        self.state_support = tuple(
            sorted([x + self.left_off for x in self.u2_darts] + [x + self.right_off for x in self.u1_darts])
        )
        self.keep_after_step = sorted([x + self.left_off for x in self.u2_darts] + self.u1_darts)
        self.u1_relabel = {x + self.left_off: x + self.left_off for x in self.u2_darts}
        self.u1_relabel.update({x: x + self.right_off for x in self.u1_darts})

        a1 = self.phi_boundary.relabel(
            {**{x: x + self.left_off for x in self.u2_darts}, **{x: x + self.right_off for x in self.u1_darts}}
        )
        self.a1 = a1.lift(self.state_support)
        self._step_memo: dict[tuple[int, ...], GroupRingElem] = {}
        self._states: list[GroupRingElem] = [self.a1]
        self._closers: dict[str, GroupRingElem] = {}
        self._completion_memo: dict[str, dict[tuple[int, ...], LaurentPoly]] = {}
        self._euler_validated = False

    # -- the transfer operator ------------------------------------------

    def _step_key(self, key) -> GroupRingElem:
        memo = self._step_memo.get(key)
        if memo is None:
            single = GroupRingElem(self.state_support, self.signed, {key: 1})
            prod = ring_multiply(self.step_core, single)
            projected = face_proj(prod, self.keep_after_step)
            memo = projected.relabel(self.u1_relabel).lift(self.state_support)
            self._step_memo[key] = memo
        return memo

    def step(self, elem: GroupRingElem) -> GroupRingElem:
        acc: dict[tuple[int, ...], object] = {}
        for key, coeff in elem.terms.items():
            image = self._step_key(key)
            for k2, c2 in image.terms.items():
                term = c2 * coeff
                prev = acc.get(k2)
                acc[k2] = term if prev is None else prev + term
        out = GroupRingElem.__new__(GroupRingElem)
        out.support = self.state_support
        out.signed = self.signed
        out.terms = {k: c for k, c in acc.items() if not c.is_zero()}
        return out

    def state(self, n: int) -> GroupRingElem:
        if n < 1:
            raise ValueError("family index starts at 1")
        while len(self._states) < n:
            self._states.append(self.step(self._states[-1]))
        return self._states[n - 1]

    # -- completions ------------------------------------------------------

    def _closer(self, kind: str) -> GroupRingElem:
        closing = self._closers.get(kind)
        if closing is not None:
            return closing
        spec, h = self.spec, self.spec.h
        if kind == "linear":
            lists = [sorted(x + self.left_off for x in h.vertex_darts[w]) for w in spec.glue.targets()]
            lists += [sorted(x + self.right_off for x in h.vertex_darts[u]) for u in spec.glue.sources()]
            closing = cyclic_sum_element(lists, self.signed)
        elif kind == "circular":
            lists = []
            for u, w in spec.glue.pairs:
                darts = [x + self.right_off for x in h.vertex_darts[u]]
                darts += [x + self.left_off for x in h.vertex_darts[w]]
                lists.append(sorted(darts))
            closing = cyclic_sum_element(lists, self.signed)
        elif kind == "capped":
            cap, cap_glue = spec.cap_graph, spec.cap_glue
            mode = "euler" if self.signed else "orientable"
            if cap.edge_count:
                cap_blown = blow_up(cap, set(cap_glue.targets()))
                cap_phi = face_element(cap_blown, mode, budget=spec.budget).relabel(
                    {x: x + self.cap_off for x in range(cap.dart_count)}
                )
            else:
                cap_phi = GroupRingElem((), self.signed, {(): 1})
            side_off = self.left_off if spec.cap_side == "left" else self.right_off
            covered = dict(cap_glue.pairs)
            lists = []
            boundary = spec.glue.targets() if spec.cap_side == "left" else spec.glue.sources()
            for bv in boundary:
                darts = [x + side_off for x in h.vertex_darts[bv]]
                if bv in covered:
                    darts += [x + self.cap_off for x in cap.vertex_darts[covered[bv]]]
                lists.append(sorted(darts))
            other_off = self.right_off if spec.cap_side == "left" else self.left_off
            other_boundary = spec.glue.sources() if spec.cap_side == "left" else spec.glue.targets()
            for bv in other_boundary:
                lists.append(sorted(x + other_off for x in h.vertex_darts[bv]))
            closing = ring_multiply(cyclic_sum_element(lists, self.signed), cap_phi)
        else:
            raise ValueError(f"unknown completion kind {kind!r}")
        self._closers[kind] = closing
        return closing

    def _complete(self, kind: str, n: int) -> LaurentPoly:
        """Face-count polynomial of the closed n-th member.

        The contribution of each state key under a fixed closing element is
        cached, so later indices only pay for the linear combination.
        """
        closing = self._closer(kind)
        memo = self._completion_memo.setdefault(kind, {})
        state = self.state(n)
        acc = LaurentPoly()
        for a_key, coeff in state.terms.items():
            column = memo.get(a_key)
            if column is None:
                single = GroupRingElem(self.state_support, self.signed, {a_key: 1})
                projected = face_proj(ring_multiply(closing, single), ())
                column = projected.terms.get((), LaurentPoly())
                memo[a_key] = column
            if not column.is_zero():
                acc = acc + column * coeff
        return acc

    def _extract_counts(self, counts: LaurentPoly, v: int, e: int) -> LaurentPoly:
        elem = GroupRingElem((), self.signed, {(): counts})
        mode = "euler" if self.signed else "orientable"
        return genus_poly_from_face_element(elem, v, e, mode)

    def linear_poly(self, n: int) -> LaurentPoly:
        spec, h = self.spec, self.spec.h
        v = n * h.vertex_count - (n - 1) * len(spec.glue.sources())
        return self._extract_counts(self._complete("linear", n), v, n * h.edge_count)

    def circular_poly(self, n: int) -> LaurentPoly:
        spec, h = self.spec, self.spec.h
        v = n * (h.vertex_count - len(spec.glue.sources()))
        return self._extract_counts(self._complete("circular", n), v, n * h.edge_count)

    def capped_poly(self, n: int) -> LaurentPoly:
        v, e = self.spec.index_graph_counts(n)
        return self._extract_counts(self._complete("capped", n), v, e)

    def poly(self, n: int) -> LaurentPoly:
        if self.signed and not self._euler_validated:
            self._validate_euler()
        if self.spec.kind == "linear":
            return self.linear_poly(n)
        if self.spec.kind == "circular":
            return self.circular_poly(n)
        return self.capped_poly(n)

    def _validate_euler(self):
        """Check the euler calibration against the oracle at n = 1, 2."""
        from .graphcore import euler_distribution_oracle

        self._euler_validated = True
        for n in (1, 2):
            g = build_family_graph(self.spec, n)
            try:
                oracle = euler_distribution_oracle(g, budget=2 * 10**6)
            except BudgetExceeded:
                return
            if self.poly_unchecked(n) != oracle.poly():
                raise AssertionError(
                    f"euler-mode calibration mismatch against the oracle at n={n}"
                )

    def poly_unchecked(self, n: int) -> LaurentPoly:
        if self.spec.kind == "linear":
            return self.linear_poly(n)
        if self.spec.kind == "circular":
            return self.circular_poly(n)
        return self.capped_poly(n)

    # -- transfer matrix ---------------------------------------------------

    def matrix(self, max_basis: int = 5000):
        """Matrix of the step operator on the basis reachable from A_1.

        Returns (basis_keys, matrix) with matrix[i][j] the coefficient of
        basis key i in the image of basis key j.
        """
        basis: list[tuple[int, ...]] = []
        position: dict[tuple[int, ...], int] = {}
        for key in sorted(self.a1.terms):
            position[key] = len(basis)
            basis.append(key)
        frontier = list(basis)
        images: dict[tuple[int, ...], GroupRingElem] = {}
        while frontier:
            nxt = []
            for key in frontier:
                img = self._step_key(key)
                images[key] = img
                for k2 in sorted(img.terms):
                    if k2 not in position:
                        position[k2] = len(basis)
                        basis.append(k2)
                        nxt.append(k2)
                        if len(basis) > max_basis:
                            raise BudgetExceeded(len(basis), max_basis)
            frontier = nxt
        size = len(basis)
        matrix = [[LaurentPoly() for _ in range(size)] for _ in range(size)]
        for j, key in enumerate(basis):
            for k2, coeff in images[key].terms.items():
                matrix[position[k2]][j] = coeff
        return basis, matrix


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def initial_state(spec: FamilySpec) -> TransferState:
    return TransferState(elem=spec.engine().a1, index=1)


def step_state(spec: FamilySpec, state: TransferState) -> TransferState:
    if state.index < 1:
        raise ValueError("state index must be >= 1")
    return TransferState(elem=spec.engine().step(state.elem), index=state.index + 1)


def family_genus_poly(spec: FamilySpec, n: int) -> LaurentPoly:
    """Genus (or Euler-genus) polynomial of the n-th family member."""
    if n < 1:
        raise ValueError("family index starts at 1")
    if spec.kind == "capped":
        return capped_family_poly(spec, n)
    return spec.engine().poly(n)


def capped_family_poly(spec: FamilySpec, n: int) -> LaurentPoly:
    if spec.kind != "capped":
        raise ValueError("capped_family_poly requires a capped family")
    if n < 1:
        raise ValueError("family index starts at 1")
    return spec.engine().poly(n)


def family_series(spec: FamilySpec, n_terms: int) -> SeriesPrefix:
    return SeriesPrefix([family_genus_poly(spec, n) for n in range(1, n_terms + 1)])


def family_rational_gf(
    spec: FamilySpec,
    p_max: int | None = None,
    q_max: int | None = None,
    guard: int = 3,
) -> RationalGF:
    """Reconstruct the family's rational generating function from its series."""
    if q_max is None:
        q_max = 16
    if p_max is None:
        p_max = q_max
    prefix = family_series(spec, p_max + q_max + guard)
    return reconstruct_rational_gf(prefix, p_max, q_max, guard)


def transfer_matrix(spec: FamilySpec, max_basis: int = 5000):
    """Reachable-basis matrix of the transfer operator, plus the x=1
    row-normalized stochastic matrix and its primitivity report."""
    from .polyalg import primitivity_check

    basis, matrix = spec.engine().matrix(max_basis=max_basis)
    size = len(basis)
    stochastic = []
    for i in range(size):
        row = [matrix[j][i].eval(1) for j in range(size)]  # outgoing weights of basis state i
        total = sum(row)
        if total == 0:
            stochastic.append([Fraction(0)] * size)
        else:
            stochastic.append([v / total for v in row])
    if any(v < 0 for row in stochastic for v in row):
        report = {"primitive": False, "note": "negative weights; not a stochastic matrix"}
    else:
        report = primitivity_check(stochastic)
    return {"basis": basis, "matrix": matrix, "stochastic": stochastic, "primitivity": report}


# ---------------------------------------------------------------------------
# stock families
# ---------------------------------------------------------------------------


def cn2_family(kind: str = "circular", mode: str = "genus", budget: int = DEFAULT_BUDGET) -> FamilySpec:
    """Doubled-edge base: the doubled-path / doubled-cycle families."""
    from .graphcore import build_named

    return make_family(build_named("dipole", [2]), GluingSpec([(0, 1)]), kind, mode, budget=budget)


def cn3_family(kind: str = "circular", mode: str = "genus", budget: int = DEFAULT_BUDGET) -> FamilySpec:
    """Tripled-edge base: the triple-edge path / cycle families."""
    from .graphcore import build_named

    return make_family(build_named("dipole", [3]), GluingSpec([(0, 1)]), kind, mode, budget=budget)


def grid3_family(mode: str = "genus", budget: int = DEFAULT_BUDGET) -> FamilySpec:
    """Height-3 grids as a capped family; t^n is the 3 x (n+2) grid.

    The base piece is a rung column with its right-side vertical edges; the
    cap supplies the missing left-end verticals plus one more full column, so
    the first member is already the 3 x 3 grid.
    """
    from .graphcore import Graph

    h = Graph(6, [(0, 3), (1, 4), (2, 5), (0, 1), (1, 2)])
    glue = GluingSpec([(0, 3), (1, 4), (2, 5)])
    cap = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
    cap_glue = GluingSpec([(3, 3), (4, 4), (5, 5)])
    return make_family(h, glue, kind="capped", mode=mode,
                       cap_graph=cap, cap_glue=cap_glue, cap_side="left", budget=budget)


# ---------------------------------------------------------------------------
# explicit family members (oracle cross-checks)
# ---------------------------------------------------------------------------


def build_family_graph(spec: FamilySpec, n: int) -> Graph:
    """Construct the n-th family member explicitly."""
    if n < 1:
        raise ValueError("family index starts at 1")
    h = spec.h
    u1, u2 = spec.glue.sources(), spec.glue.targets()
    # global ids: copy k reuses the ids of the merged targets for its U2
    maps = []
    next_id = 0
    first_map: dict[int, int] = {}
    for v in range(h.vertex_count):
        first_map[v] = next_id
        next_id += 1
    maps.append(first_map)
    for _ in range(1, n):
        prev = maps[-1]
        mapping: dict[int, int] = {}
        for w, u in zip(u2, u1):
            mapping[w] = prev[u]
        for v in range(h.vertex_count):
            if v not in mapping:
                mapping[v] = next_id
                next_id += 1
        maps.append(mapping)
    edges = []
    for mapping in maps:
        edges.extend((mapping[a], mapping[b]) for a, b in h.edges)
    if spec.kind == "circular":
        # merge the last copy's U1 into the first copy's U2
        merge = {maps[-1][u]: maps[0][w] for u, w in zip(u1, u2)}
        relabel: dict[int, int] = {}
        fresh = 0
        for vid in range(next_id):
            if vid in merge:
                continue
            relabel[vid] = fresh
            fresh += 1
        final = {vid: relabel[merge.get(vid, vid)] for vid in range(next_id)}
        edges = [(final[a], final[b]) for a, b in edges]
        return Graph(fresh, edges)
    if spec.kind == "capped":
        cap, cap_glue = spec.cap_graph, spec.cap_glue
        boundary_map = maps[0] if spec.cap_side == "left" else maps[-1]
        covered = {w: u for u, w in cap_glue.pairs}  # cap vertex -> boundary vertex label in h
        cap_map: dict[int, int] = {}
        for cv in range(cap.vertex_count):
            if cv in covered:
                cap_map[cv] = boundary_map[covered[cv]]
            else:
                cap_map[cv] = next_id
                next_id += 1
        edges.extend((cap_map[a], cap_map[b]) for a, b in cap.edges)
        return Graph(next_id, edges)
    return Graph(next_id, edges)
