"""Group-ring machinery over dart sets: permutations with Laurent-polynomial
coefficients, cycle projections, face projections, cyclic-sum elements, and
face elements of graphs.

Two modes share one container.  In orientable mode keys are permutations of
the darts themselves and the face permutation of a rotation system sends a
dart to the rotation successor of its edge partner.  In euler mode keys are
permutations of signed darts (dart, direction); the face object of an
embedding is its face-walk successor map, enumerated over all rotations and
the full per-edge twist space.  Signed points of dart d are encoded locally
as 2i / 2i+1 for +d / -d, where i is the index of d in the sorted support.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .graphcore import BudgetExceeded, DEFAULT_BUDGET, Graph, iter_rotations, _succ_pred
from .polyalg import LaurentPoly


class SupportError(ValueError):
    pass


def _point_count(support_size: int, signed: bool) -> int:
    return 2 * support_size if signed else support_size


def identity_key(support_size: int, signed: bool) -> tuple[int, ...]:
    return tuple(range(_point_count(support_size, signed)))


def key_cycles(key: tuple[int, ...]):
    """Cycle decomposition of a permutation key over local point codes."""
    seen = [False] * len(key)
    for start in range(len(key)):
        if seen[start]:
            continue
        cyc = []
        p = start
        while not seen[p]:
            seen[p] = True
            cyc.append(p)
            p = key[p]
        yield tuple(cyc)


class GroupRingElem:
    """Sparse map from permutation keys to Laurent polynomials."""

    __slots__ = ("signed", "support", "terms")

    def __init__(self, support, signed: bool, terms=None):
        self.support = tuple(sorted(support))
        if len(set(self.support)) != len(self.support):
            raise SupportError("support darts must be distinct")
        self.signed = signed
        data: dict[tuple[int, ...], LaurentPoly] = {}
        if terms:
            n = _point_count(len(self.support), signed)
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                key = tuple(key)
                if len(key) != n or sorted(key) != list(range(n)):
                    raise ValueError("key is not a permutation of the support points")
                if not isinstance(coeff, LaurentPoly):
                    coeff = LaurentPoly.const(coeff)
                if key in data:
                    coeff = data[key] + coeff
                if coeff.is_zero():
                    data.pop(key, None)
                else:
                    data[key] = coeff
        self.terms = data

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, support, signed: bool, coeff=1) -> "GroupRingElem":
        support = tuple(sorted(support))
        return cls(support, signed, {identity_key(len(support), signed): coeff})

    @classmethod
    def scalar(cls, coeff, signed: bool) -> "GroupRingElem":
        return cls((), signed, {(): coeff})

    def copy_with_terms(self, terms) -> "GroupRingElem":
        out = GroupRingElem.__new__(GroupRingElem)
        out.support = self.support
        out.signed = self.signed
        out.terms = terms
        return out

    # -- basics -----------------------------------------------------------

    def term_count(self) -> int:
        return len(self.terms)

    def coeff_sum(self) -> LaurentPoly:
        total = LaurentPoly()
        for c in self.terms.values():
            total = total + c
        return total

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        if self.signed != other.signed:
            raise SupportError("cannot mix signed and unsigned elements")
        if self.support != other.support:
            union = sorted(set(self.support) | set(other.support))
            return self.lift(union) + other.lift(union)
        data = dict(self.terms)
        for key, c in other.terms.items():
            s = data.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                data.pop(key, None)
            else:
                data[key] = s
        return self.copy_with_terms(data)

    def scale(self, factor) -> "GroupRingElem":
        if not isinstance(factor, LaurentPoly):
            factor = LaurentPoly.const(factor)
        if factor.is_zero():
            return GroupRingElem(self.support, self.signed)
        return self.copy_with_terms({k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        if self.signed != other.signed:
            return False
        if self.support != other.support:
            union = sorted(set(self.support) | set(other.support))
            return self.lift(union) == other.lift(union)
        return self.terms == other.terms

    def lift(self, new_support) -> "GroupRingElem":
        """Embed into a larger support, padding keys with fixed points."""
        new_support = tuple(sorted(new_support))
        if new_support == self.support:
            return self
        if not set(self.support) <= set(new_support):
            raise SupportError("lift target must contain the current support")
        k_old, k_new = len(self.support), len(new_support)
        pos = {d: i for i, d in enumerate(new_support)}
        if self.signed:
            trans = [0] * (2 * k_old)
            for i, d in enumerate(self.support):
                trans[2 * i] = 2 * pos[d]
                trans[2 * i + 1] = 2 * pos[d] + 1
            n_new = 2 * k_new
        else:
            trans = [pos[d] for d in self.support]
            n_new = k_new
        data = {}
        base = list(range(n_new))
        for key, c in self.terms.items():
            new_key = base[:]
            for i, img in enumerate(key):
                new_key[trans[i]] = trans[img]
            data[tuple(new_key)] = c
        out = GroupRingElem.__new__(GroupRingElem)
        out.support = new_support
        out.signed = self.signed
        out.terms = data
        return out

    def relabel(self, mapping: dict[int, int]) -> "GroupRingElem":
        """Rename support darts by an injective map; keys move along."""
        new_support = tuple(sorted(mapping[d] for d in self.support))
        if len(set(new_support)) != len(self.support):
            raise SupportError("relabeling must be injective")
        order = sorted(range(len(self.support)), key=lambda i: mapping[self.support[i]])
        # order[j] = old index of the dart that lands at new index j
        inv = [0] * len(order)
        for j, i in enumerate(order):
            inv[i] = j
        if self.signed:
            trans = [0] * (2 * len(order))
            for i in range(len(order)):
                trans[2 * i] = 2 * inv[i]
                trans[2 * i + 1] = 2 * inv[i] + 1
        else:
            trans = inv
        data = {}
        n = len(trans)
        for key, c in self.terms.items():
            new_key = [0] * n
            for i, img in enumerate(key):
                new_key[trans[i]] = trans[img]
            data[tuple(new_key)] = c
        out = GroupRingElem.__new__(GroupRingElem)
        out.support = new_support
        out.signed = self.signed
        out.terms = data
        return out

    def dump(self) -> str:
        """Debug format: one line per term, cycle notation + coefficient."""
        lines = []
        for key in sorted(self.terms):
            cycles = []
            for cyc in key_cycles(key):
                if len(cyc) == 1 and not self.signed:
                    continue
                names = [self._point_name(p) for p in cyc]
                cycles.append("(" + " ".join(names) + ")")
            perm_text = "".join(cycles) or "()"
            lines.append(f"{perm_text}  *  {self.terms[key].pretty()}")
        return "\n".join(lines)

    def _point_name(self, p: int) -> str:
        if self.signed:
            d = self.support[p // 2]
            return str(d) if p % 2 == 0 else f"-{d}"
        return str(self.support[p])

    def __repr__(self):
        kind = "signed" if self.signed else "plain"
        return f"GroupRingElem({kind}, support={self.support}, {len(self.terms)} terms)"


def ring_multiply(a: GroupRingElem, b: GroupRingElem) -> GroupRingElem:
    """Bilinear product; keys compose as functions (right factor first)."""
    if a.signed != b.signed:
        raise SupportError("cannot multiply signed with unsigned elements")
    if a.support != b.support:
        sa, sb = set(a.support), set(b.support)
        union = sorted(sa | sb)
        a = a.lift(union)
        b = b.lift(union)
    data: dict[tuple[int, ...], LaurentPoly] = {}
    b_items = list(b.terms.items())
    for ka, ca in a.terms.items():
        for kb, cb in b_items:
            key = tuple(ka[x] for x in kb)
            c = ca * cb
            s = data.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                data.pop(key, None)
            else:
                data[key] = s
    return a.copy_with_terms(data)


def ring_product(factors) -> GroupRingElem:
    factors = list(factors)
    if not factors:
        raise ValueError("empty product")
    out = factors[0]
    for f in factors[1:]:
        out = ring_multiply(out, f)
    return out


def _restriction_tables(elem: GroupRingElem, sub_support):
    sub_support = tuple(sorted(sub_support))
    if not set(sub_support) <= set(elem.support):
        raise SupportError("projection target must be a subset of the support")
    pos_new = {d: i for i, d in enumerate(sub_support)}
    if elem.signed:
        keep = [False] * (2 * len(elem.support))
        to_new = [0] * (2 * len(elem.support))
        for i, d in enumerate(elem.support):
            if d in pos_new:
                j = pos_new[d]
                keep[2 * i] = keep[2 * i + 1] = True
                to_new[2 * i] = 2 * j
                to_new[2 * i + 1] = 2 * j + 1
        n_new = 2 * len(sub_support)
    else:
        keep = [d in pos_new for d in elem.support]
        to_new = [pos_new.get(d, 0) for d in elem.support]
        n_new = len(sub_support)
    return sub_support, keep, to_new, n_new


def _restrict_key(key, keep, to_new, n_new):
    """Cycle restriction of a permutation key to the kept points."""
    new_key = [0] * n_new
    for p in range(len(key)):
        if not keep[p]:
            continue
        q = key[p]
        while not keep[q]:
            q = key[q]
        new_key[to_new[p]] = to_new[q]
    return tuple(new_key)


def proj(elem: GroupRingElem, sub_support) -> GroupRingElem:
    """Linear extension of cycle restriction to a dart subset."""
    sub_support, keep, to_new, n_new = _restriction_tables(elem, sub_support)
    data: dict[tuple[int, ...], LaurentPoly] = {}
    for key, c in elem.terms.items():
        new_key = _restrict_key(key, keep, to_new, n_new)
        s = data.get(new_key)
        s = c if s is None else s + c
        if s.is_zero():
            data.pop(new_key, None)
        else:
            data[new_key] = s
    out = GroupRingElem.__new__(GroupRingElem)
    out.support = sub_support
    out.signed = elem.signed
    out.terms = data
    return out


def face_proj(elem: GroupRingElem, sub_support) -> GroupRingElem:
    """Cycle restriction that records each discarded cycle as a power of x.

    A term's coefficient is multiplied by x^m where m is the number of cycles
    of the permutation that avoid the kept darts entirely (in euler mode the
    count is over signed points, two cycles per geometric face).
    """
    sub_support, keep, to_new, n_new = _restriction_tables(elem, sub_support)
    data: dict[tuple[int, ...], LaurentPoly] = {}
    for key, c in elem.terms.items():
        dropped = 0
        seen = [False] * len(key)
        for start in range(len(key)):
            if seen[start]:
                continue
            p = start
            hits_kept = False
            while not seen[p]:
                seen[p] = True
                if keep[p]:
                    hits_kept = True
                p = key[p]
            if not hits_kept:
                dropped += 1
        new_key = _restrict_key(key, keep, to_new, n_new)
        c = c.shift(dropped) if dropped else c
        s = data.get(new_key)
        s = c if s is None else s + c
        if s.is_zero():
            data.pop(new_key, None)
        else:
            data[new_key] = s
    out = GroupRingElem.__new__(GroupRingElem)
    out.support = sub_support
    out.signed = elem.signed
    out.terms = data
    return out


# ---------------------------------------------------------------------------
# Cyclic sums and face elements
# ---------------------------------------------------------------------------


def _cycle_keys_unsigned(darts_sorted):
    """All (d-1)! full-cycle keys on one vertex's darts (local codes)."""
    k = len(darts_sorted)
    if k == 0:
        return [()]
    keys = []
    for rest in itertools.permutations(range(1, k)):
        order = (0,) + rest
        key = [0] * k
        for i in range(k):
            key[order[i]] = order[(i + 1) % k]
        keys.append(tuple(key))
    return keys


def _turn_key_signed(order, k):
    """Turn permutation of a rotation cycle: +e -> +next(e), -e -> -prev(e)."""
    key = [0] * (2 * k)
    for i in range(k):
        e, nxt = order[i], order[(i + 1) % k]
        key[2 * e] = 2 * nxt
        key[2 * nxt + 1] = 2 * e + 1
    return tuple(key)


def cyclic_sum_element(vertex_dart_lists, signed: bool) -> GroupRingElem:
    """Sum over products of one full rotation cycle per vertex.

    Unsigned mode: all (d_u - 1)! cyclic permutations of each vertex's darts.
    Euler mode uses the turn lift of the same cycles, which is the vertex-
    rotation action on face-walk states.
    """
    factors = []
    for darts in vertex_dart_lists:
        darts = sorted(darts)
        if not darts:
            raise ValueError("vertex with no darts in cyclic sum")
        k = len(darts)
        terms = {}
        for rest in itertools.permutations(range(1, k)):
            order = (0,) + rest
            if signed:
                key = _turn_key_signed(order, k)
            else:
                key = [0] * k
                for i in range(k):
                    key[order[i]] = order[(i + 1) % k]
                key = tuple(key)
            terms[key] = terms.get(key, 0) + 1
        factors.append(GroupRingElem(darts, signed, terms))
    return ring_product(factors)


def _face_key_orientable(graph: Graph, rotation) -> tuple[int, ...]:
    succ, _ = _succ_pred(graph, rotation)
    return tuple(succ[d ^ 1] for d in range(graph.dart_count))


def _face_key_euler(graph: Graph, succ, pred, twisted) -> tuple[int, ...]:
    n = graph.dart_count
    key = [0] * (2 * n)
    for d in range(n):
        partner = d ^ 1
        if twisted[d >> 1]:
            key[2 * d] = 2 * pred[partner] + 1
            key[2 * d + 1] = 2 * succ[partner]
        else:
            key[2 * d] = 2 * succ[partner]
            key[2 * d + 1] = 2 * pred[partner] + 1
    return tuple(key)


def face_element(graph: Graph, mode: str = "orientable", budget: int = DEFAULT_BUDGET) -> GroupRingElem:
    """Formal sum of face permutations over all embeddings of the graph.

    The graph may be disconnected.  Euler mode enumerates rotations times the
    full 2^|E| twist space; the resulting overcount relative to canonical
    embeddings is the uniform constant 2^(v - components), absorbed by
    genus_poly_from_face_element.
    """
    support = list(range(graph.dart_count))
    if mode == "orientable":
        required = graph.rotation_count()
        if required > budget:
            raise BudgetExceeded(required, budget)
        terms: dict[tuple[int, ...], LaurentPoly] = {}
        one = LaurentPoly.const(1)
        for rotation in iter_rotations(graph):
            key = _face_key_orientable(graph, rotation)
            prev = terms.get(key)
            terms[key] = one if prev is None else prev + one
        return GroupRingElem(support, False, terms)
    if mode == "euler":
        required = graph.rotation_count() << graph.edge_count
        if required > budget:
            raise BudgetExceeded(required, budget)
        terms = {}
        one = LaurentPoly.const(1)
        n_edges = graph.edge_count
        for rotation in iter_rotations(graph):
            succ, pred = _succ_pred(graph, rotation)
            for mask in range(1 << n_edges):
                twisted = [(mask >> e) & 1 for e in range(n_edges)]
                key = _face_key_euler(graph, succ, pred, twisted)
                prev = terms.get(key)
                terms[key] = one if prev is None else prev + one
        return GroupRingElem(support, True, terms)
    raise ValueError(f"unknown face element mode {mode!r}")


def genus_poly_from_face_element(
    elem: GroupRingElem,
    vertex_count: int,
    edge_count: int,
    mode: str = "orientable",
    components: int = 1,
) -> LaurentPoly:
    """Convert a fully projected face element into a genus or Euler-genus
    polynomial.

    Orientable mode: an embedding contributing F face cycles lands at genus
    (2 - v + e - F) / 2.  Euler mode: signed face walks come in two cycles
    per face, so Euler-genus is 2 - v + e - F/2, and the full-twist
    enumeration constant 2^(v - components) is divided out.
    """
    if elem.support:
        elem = face_proj(elem, ())
    counts = elem.terms.get((), LaurentPoly())
    out: dict[int, Fraction] = {}
    scale = Fraction(1)
    if mode == "euler":
        scale = Fraction(1, 2 ** (vertex_count - components))
    for f_count, coeff in counts.terms.items():
        if mode == "orientable":
            num = 2 - vertex_count + edge_count - f_count
            if num % 2:
                raise ValueError("odd Euler-genus in orientable extraction; inconsistent input")
            exponent = num // 2
        elif mode == "euler":
            if f_count % 2:
                raise ValueError("odd signed face count; inconsistent input")
            exponent = 2 - vertex_count + edge_count - f_count // 2
        else:
            raise ValueError(f"unknown extraction mode {mode!r}")
        if exponent < 0:
            raise ValueError("negative genus exponent; inconsistent input")
        out[exponent] = out.get(exponent, Fraction(0)) + coeff * scale
    result = LaurentPoly(out)
    for c in result.terms.values():
        if c.denominator != 1:
            raise ValueError("non-integer embedding count; inconsistent input")
    return result
