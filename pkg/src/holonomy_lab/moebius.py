"""Finite rotation groups acting on the Riemann sphere by homographies.

Each of the five kinds (cyclic, dihedral, tetrahedral, octahedral,
icosahedral) is realised by explicit generator matrices over one fixed
cyclotomic field, chosen large enough that every point with nontrivial
stabiliser has exact coordinates in the field.  Group enumeration, the
multiplication table, fixed points, stabilisers, orbits and the antipodal
pairing of the exceptional locus are all computed and cross-verified in
exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .cyclo import CycloNum, DivisionByZero

KINDS = ("cyclic", "dihedral", "tetrahedral", "octahedral", "icosahedral")


class UnsupportedParams(ValueError):
    """Bad group-kind parameters."""


class IdentityElement(ValueError):
    """Fixed points of the identity requested (the whole sphere)."""


class ModelError(RuntimeError):
    """Internal consistency failure while building a group model."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class ProjPoint:
    """A point of P^1 in homogeneous coordinates [a : b], stored normalised.

    Finite points are [z : 1]; infinity is [1 : 0].
    """

    __slots__ = ("a", "b")

    def __init__(self, a: CycloNum, b: CycloNum):
        if a.order != b.order:
            raise ValueError("coordinates must share a cyclotomic order")
        if b.is_zero():
            if a.is_zero():
                raise ValueError("[0 : 0] is not a point")
            a = CycloNum.one(a.order)
        else:
            a = a / b
            b = CycloNum.one(b.order)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, *_):
        raise AttributeError("ProjPoint is immutable")

    @staticmethod
    def finite(z: CycloNum) -> ProjPoint:
        return ProjPoint(z, CycloNum.one(z.order))

    @staticmethod
    def infinity(order: int) -> ProjPoint:
        return ProjPoint(CycloNum.one(order), CycloNum.zero(order))

    @property
    def is_infinity(self) -> bool:
        return self.b.is_zero()

    def value(self) -> CycloNum:
        if self.is_infinity:
            raise ValueError("infinity has no affine value")
        return self.a

    def antipode(self) -> ProjPoint:
        """The fixed-point-free involution z -> -1/conj(z)."""
        return ProjPoint(-self.b.conj(), self.a.conj())

    def embed(self) -> complex | None:
        """Complex value, or None for infinity."""
        if self.is_infinity:
            return None
        return self.a.embed()

    def lift(self, order: int) -> ProjPoint:
        return ProjPoint(self.a.lift(order), self.b.lift(order))

    def text(self) -> str:
        return "inf" if self.is_infinity else self.a.text()

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return (self.a * other.b) == (other.a * self.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"ProjPoint({self.text()})"


class MoebiusMap:
    """An invertible homography z -> (az+b)/(cz+d), normalised projectively.

    The stored representative is scaled so that the first nonzero entry in
    row-major order equals 1, which makes projective equality a plain
    comparison of stored entries.
    """

    __slots__ = ("entries",)

    def __init__(self, a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum):
        det = a * d - b * c
        if det.is_zero():
            raise ValueError("singular matrix is not a Moebius map")
        for e in (a, b, c, d):
            if not e.is_zero():
                s = e.inv()
                break
        object.__setattr__(self, "entries", (a * s, b * s, c * s, d * s))

    def __setattr__(self, *_):
        raise AttributeError("MoebiusMap is immutable")

    @staticmethod
    def from_rows(rows, order: int) -> MoebiusMap:
        """Build from a 2x2 nested sequence of CycloNum/int/Fraction."""
        flat = [rows[0][0], rows[0][1], rows[1][0], rows[1][1]]
        flat = [e if isinstance(e, CycloNum) else CycloNum.of(e, order) for e in flat]
        return MoebiusMap(*flat)

    @staticmethod
    def identity(order: int) -> MoebiusMap:
        one, zero = CycloNum.one(order), CycloNum.zero(order)
        return MoebiusMap(one, zero, zero, one)

    @property
    def order_field(self) -> int:
        return self.entries[0].order

    def apply(self, p: ProjPoint) -> ProjPoint:
        a, b, c, d = self.entries
        return ProjPoint(a * p.a + b * p.b, c * p.a + d * p.b)

    def apply_value(self, z: CycloNum) -> ProjPoint:
        """Image of a finite point given by its affine value."""
        return self.apply(ProjPoint.finite(z))

    def __matmul__(self, other: MoebiusMap) -> MoebiusMap:
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MoebiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inv(self) -> MoebiusMap:
        a, b, c, d = self.entries
        return MoebiusMap(d, -b, -c, a)

    def is_identity(self) -> bool:
        a, b, c, d = self.entries
        return b.is_zero() and c.is_zero() and a == d

    def same_map(self, other: MoebiusMap) -> bool:
        """Projective equality (entrywise, as both are normalised)."""
        return all(x == y for x, y in zip(self.entries, other.entries))

    def is_projectively_unitary(self) -> bool:
        """Whether M * conj(M)^T is a scalar matrix (PSU(2) membership)."""
        a, b, c, d = self.entries
        ac, bc, cc, dc = (e.conj() for e in (a, b, c, d))
        off1 = a * cc + b * dc
        off2 = c * ac + d * bc
        diag = (a * ac + b * bc) - (c * cc + d * dc)
        return off1.is_zero() and off2.is_zero() and diag.is_zero()

    def embed(self):
        a, b, c, d = self.entries
        return (a.embed(), b.embed(), c.embed(), d.embed())

    def text_rows(self):
        a, b, c, d = self.entries
        return [[a.text(), b.text()], [c.text(), d.text()]]

    def __repr__(self):
        return f"MoebiusMap({self.text_rows()})"


# --------------------------------------------------------------------------
# Concrete matrix models.  Any PSU(2)-conjugate model would do; the one used
# is recorded in reports.  The field for each kind is the smallest cyclotomic
# field (within this model family) containing both the matrix entries and the
# coordinates of every point with nontrivial stabiliser.
# --------------------------------------------------------------------------


def _model(kind: str, n: int | None):
    if kind == "cyclic":
        if n is None or n < 2:
            raise UnsupportedParams("cyclic groups need N >= 2")
        m = _lcm(4, n)
        zn = CycloNum.zeta(m, m // n)
        gens = [MoebiusMap.from_rows([[zn, 0], [0, 1]], m)]
        seeds = [ProjPoint.finite(CycloNum.zero(m))]
        desc = f"z -> zeta_{n} z over Q(zeta_{m})"
        return m, n, gens, seeds, desc
    if kind == "dihedral":
        if n is None or n < 2:
            raise UnsupportedParams("dihedral groups need N >= 2")
        m = _lcm(4, 2 * n)
        zn = CycloNum.zeta(m, m // n)
        z2n = CycloNum.zeta(m, m // (2 * n))
        gens = [
            MoebiusMap.from_rows([[zn, 0], [0, 1]], m),
            MoebiusMap.from_rows([[0, 1], [1, 0]], m),
        ]
        seeds = [
            ProjPoint.finite(CycloNum.zero(m)),
            ProjPoint.finite(CycloNum.one(m)),
            ProjPoint.finite(z2n),
        ]
        desc = f"z -> zeta_{n} z and z -> 1/z over Q(zeta_{m})"
        return m, 2 * n, gens, seeds, desc
    if kind == "tetrahedral":
        m = 12
        i = CycloNum.zeta(m, 3)
        one = CycloNum.one(m)
        w = MoebiusMap.from_rows([[one + i, one + i], [i - one, one - i]], m)
        flip = MoebiusMap.from_rows([[-1, 0], [0, 1]], m)
        sqrt3 = CycloNum.zeta(m) + CycloNum.zeta(m, -1)
        vertex = (one + sqrt3) * (one - i) / CycloNum.of(2, m)
        seeds = [ProjPoint.finite(CycloNum.zero(m)), ProjPoint.finite(vertex)]
        desc = f"z -> -z and the order-3 axis rotation over Q(zeta_{m})"
        return m, 12, [flip, w], seeds, desc
    if kind == "octahedral":
        m = 24
        i = CycloNum.zeta(m, 6)
        one = CycloNum.one(m)
        w = MoebiusMap.from_rows([[one + i, one + i], [i - one, one - i]], m)
        quarter = MoebiusMap.from_rows([[i, 0], [0, 1]], m)
        sqrt3 = CycloNum.zeta(m, 2) + CycloNum.zeta(m, -2)
        vertex = (one + sqrt3) * (one - i) / CycloNum.of(2, m)
        seeds = [
            ProjPoint.finite(CycloNum.zero(m)),
            ProjPoint.finite(vertex),
            ProjPoint.finite(CycloNum.zeta(m, 3)),
        ]
        desc = f"z -> i z and the order-3 axis rotation over Q(zeta_{m})"
        return m, 24, [quarter, w], seeds, desc
    if kind == "icosahedral":
        m = 60
        z5 = CycloNum.zeta(m, 12)
        a = z5 - z5 ** 4
        b = z5 ** 2 - z5 ** 3
        rot = MoebiusMap.from_rows([[z5, 0], [0, 1]], m)
        flip = MoebiusMap(a, b, b, -a)
        ii = CycloNum.zeta(m, 15)
        sqrt5 = CycloNum.of(1, m) + 2 * z5 + 2 * z5 ** 4
        sqrt3 = CycloNum.zeta(m, 5) + CycloNum.zeta(m, -5)
        edge = (a + ii * sqrt5) / b
        # Fixed point of rot @ flip (an order-3 element); the discriminant of
        # its fixed-point quadratic is 15 * zeta_10^(-3).
        disc_root = sqrt3 * sqrt5 * CycloNum.zeta(m, -9)
        face = (a * (CycloNum.one(m) + z5) + disc_root) / (2 * b)
        seeds = [
            ProjPoint.finite(CycloNum.zero(m)),
            ProjPoint.finite(edge),
            ProjPoint.finite(face),
        ]
        desc = f"z -> zeta_5 z and an order-2 icosahedral flip over Q(zeta_{m})"
        return m, 60, [rot, flip], seeds, desc
    raise UnsupportedParams(f"unknown kind {kind!r}; expected one of {KINDS}")


# --------------------------------------------------------------------------
# Identification: numeric fingerprints select a candidate, exact projective
# comparison confirms it.  Only generator rows of the multiplication and
# point-action tables are computed in exact arithmetic; the remaining rows
# follow by permutation composition, which is exact by associativity.
# --------------------------------------------------------------------------

_PROBES = (0.437 + 0.291j, -1.118 + 0.707j, 0.195 - 1.822j)


def _map_fingerprint(emb) -> tuple:
    a, b, c, d = emb
    out = []
    for w in _PROBES:
        num, den = a * w + b, c * w + d
        v = num / den if abs(den) > 1e-9 else complex(1e9, 1e9)
        out.append((round(v.real, 6), round(v.imag, 6)))
    return tuple(out)


def _point_fingerprint(v: complex | None) -> tuple:
    if v is None or abs(v) > 1e8:
        return ("inf",)
    return (round(v.real, 6), round(v.imag, 6))


def _raw_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _emb_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _raw_same_map(raw, normalized: MoebiusMap) -> bool:
    ent = normalized.entries
    k = next(i for i, e in enumerate(ent) if not e.is_zero())
    pk = raw[k]
    return all(raw[u] == pk * ent[u] for u in range(4) if u != k)


def _raw_same_point(raw_a, raw_b, point: ProjPoint) -> bool:
    return (raw_a * point.b) == (raw_b * point.a)


def _emb_apply(emb, z: complex | None) -> complex | None:
    a, b, c, d = emb
    if z is None:
        num, den = a, c
    else:
        num, den = a * z + b, c * z + d
    if abs(den) <= 1e-9 * max(1.0, abs(num)):
        return None
    return num / den


class _MapTable:
    """Normalised group elements with fingerprint buckets."""

    def __init__(self):
        self.items: list[MoebiusMap] = []
        self.embeds: list[tuple] = []
        self.buckets: dict = {}

    def find_raw(self, raw, emb) -> int | None:
        for idx in self.buckets.get(_map_fingerprint(emb), ()):
            if _raw_same_map(raw, self.items[idx]):
                return idx
        return None

    def add(self, mapped: MoebiusMap) -> int:
        idx = len(self.items)
        self.items.append(mapped)
        self.embeds.append(mapped.embed())
        self.buckets.setdefault(_map_fingerprint(self.embeds[idx]), []).append(idx)
        return idx


class _PointTable:
    def __init__(self):
        self.items: list[ProjPoint] = []
        self.embeds: list[complex | None] = []
        self.buckets: dict = {}

    def find_raw(self, raw_a, raw_b, emb: complex | None) -> int | None:
        for idx in self.buckets.get(_point_fingerprint(emb), ()):
            if _raw_same_point(raw_a, raw_b, self.items[idx]):
                return idx
        return None

    def add(self, p: ProjPoint) -> int:
        idx = len(self.items)
        self.items.append(p)
        self.embeds.append(p.embed())
        self.buckets.setdefault(_point_fingerprint(self.embeds[idx]), []).append(idx)
        return idx


@dataclass
class FiniteGroupData:
    """A fully enumerated finite Moebius group with its exceptional geometry."""

    kind: str
    n_param: int | None
    field_order: int
    elements: list[MoebiusMap]
    mult: list[list[int]]
    inv: list[int]
    identity: int
    exceptional: list[ProjPoint]
    p_half: list[int]
    at_partner: list[int]
    stabilizers: list[list[int]]
    orbit_id: list[int]
    orbits: list[list[int]]
    point_action: list[list[int]]
    model_description: str
    _embedded: list | None = field(default=None, repr=False)
    _embedded_points: list | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, g: int) -> int:
        k, cur = 1, g
        while cur != self.identity:
            cur = self.mult[cur][g]
            k += 1
        return k

    def fixed_points(self, g) -> tuple[ProjPoint, ProjPoint]:
        """The two fixed points {p, at(p)} of a nontrivial group element."""
        if isinstance(g, MoebiusMap):
            idx = next(
                (k for k, e in enumerate(self.elements) if e.same_map(g)), None
            )
            if idx is None:
                raise ValueError("map is not an element of this group")
            g = idx
        if g == self.identity:
            raise IdentityElement("every point is fixed by the identity")
        fixed = [p for p in range(len(self.exceptional)) if self.point_action[g][p] == p]
        if len(fixed) != 2:
            raise ModelError(f"element {g} fixes {len(fixed)} exceptional points")
        return self.exceptional[fixed[0]], self.exceptional[fixed[1]]

    def point_index(self, p: ProjPoint) -> int:
        for k, q in enumerate(self.exceptional):
            if q == p:
                return k
        raise ValueError(f"{p} is not an exceptional point")

    def stab_order(self, point_idx: int) -> int:
        return len(self.stabilizers[point_idx])

    def embedded_elements(self):
        if self._embedded is None:
            self._embedded = [g.embed() for g in self.elements]
        return self._embedded

    def embedded_points(self):
        if self._embedded_points is None:
            self._embedded_points = [p.embed() for p in self.exceptional]
        return self._embedded_points

    def element_label(self, g: int) -> str:
        return f"g{g}"

    def point_label(self, p: int) -> str:
        return f"q{p}"

    def to_report(self) -> dict:
        pts = []
        for k, p in enumerate(self.exceptional):
            pts.append(
                {
                    "label": self.point_label(k),
                    "point": p.text(),
                    "orbit": self.orbit_id[k],
                    "stabilizer_order": len(self.stabilizers[k]),
                    "antipodal_partner": self.point_label(self.at_partner[k]),
                    "in_half": k in set(self.p_half),
                }
            )
        return {
            "kind": self.kind,
            "N": self.n_param,
            "order": self.order,
            "cyclotomic_order": self.field_order,
            "model": self.model_description,
            "elements": [
                {"label": self.element_label(k), "matrix": g.text_rows()}
                for k, g in enumerate(self.elements)
            ],
            "exceptional_count": len(self.exceptional),
            "exceptional": pts,
            "partition_sum": sum(len(self.stabilizers[k]) - 1 for k in self.p_half),
        }


def _close_group(gens: list[MoebiusMap], order_bound: int, m: int):
    """BFS closure; returns the table plus each element's (parent, generator)."""
    table = _MapTable()
    table.add(MoebiusMap.identity(m))
    parents: list[tuple[int, int] | None] = [None]
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for j, g in enumerate(gens):
                raw = _raw_mul(table.items[i].entries, g.entries)
                emb = _emb_mul(table.embeds[i], g.embed())
                if table.find_raw(raw, emb) is None:
                    table.add(MoebiusMap(*raw))
                    parents.append((i, j))
                    nxt.append(len(table.items) - 1)
                    if len(table.items) > order_bound:
                        raise ModelError("closure exceeded the expected group order")
        frontier = nxt
    return table, parents


def build_group(kind: str, N: int | None = None) -> FiniteGroupData:
    """Enumerate the finite group and all derived exceptional-locus data.

    Every structural claim is verified exactly during the build; a failure
    raises ModelError rather than returning approximate data.
    """
    m, expected, gens, seeds, desc = _model(kind, N)
    for g in gens:
        if not g.is_projectively_unitary():
            raise ModelError("generator is not projectively unitary")

    table, parents = _close_group(gens, expected, m)
    elements = table.items
    if len(elements) != expected:
        raise ModelError(
            f"{kind} closure produced {len(elements)} elements, expected {expected}"
        )
    size = len(elements)
    identity = 0
    if not elements[identity].is_identity():
        raise ModelError("closure did not start at the identity")

    # Left-multiplication rows: exact for the generators, then composed along
    # the BFS parent chain g = p @ s, so mult[g][h] = mult[p][mult[s][h]].
    gen_elem_idx = []
    for g in gens:
        raw, emb = g.entries, g.embed()
        k = table.find_raw(raw, emb)
        if k is None:
            raise ModelError("generator missing from closure")
        gen_elem_idx.append(k)

    mult: list[list[int] | None] = [None] * size
    mult[identity] = list(range(size))
    for j, gi in enumerate(gen_elem_idx):
        if mult[gi] is not None:
            continue
        row = []
        for h in range(size):
            raw = _raw_mul(elements[gi].entries, elements[h].entries)
            emb = _emb_mul(table.embeds[gi], table.embeds[h])
            k = table.find_raw(raw, emb)
            if k is None:
                raise ModelError("product escaped the enumerated group")
            row.append(k)
        mult[gi] = row
    for g in range(size):
        if mult[g] is not None:
            continue
        p, j = parents[g]
        row_p, row_s = mult[p], mult[gen_elem_idx[j]]
        if row_p is None or row_s is None:
            raise ModelError("parent rows missing during table composition")
        mult[g] = [row_p[row_s[h]] for h in range(size)]
    mult = [row for row in mult]  # type: ignore[list-item]

    inv = [row.index(identity) for row in mult]

    # Exceptional locus: close the seed points (plus antipodes) under G.
    pts = _PointTable()
    frontier = []
    for s in seeds:
        for p in (s, s.antipode()):
            if pts.find_raw(p.a, p.b, p.embed()) is None:
                pts.add(p)
                frontier.append(len(pts.items) - 1)
    while frontier:
        nxt = []
        for pi in frontier:
            for g in gens:
                img = g.apply(pts.items[pi])
                if pts.find_raw(img.a, img.b, img.embed()) is None:
                    pts.add(img)
                    nxt.append(len(pts.items) - 1)
        frontier = nxt

    # Deterministic point order: finite points by wire text, infinity last.
    raw_points = pts.items
    order_key = [("1", "") if p.is_infinity else ("0", p.text()) for p in raw_points]
    perm = sorted(range(len(raw_points)), key=lambda k: order_key[k])
    exceptional = [raw_points[k] for k in perm]

    lookup = _PointTable()
    for p in exceptional:
        lookup.add(p)
    npts = len(exceptional)

    # Point-action rows: exact for generators, composed along parent chains.
    point_action: list[list[int] | None] = [None] * size
    point_action[identity] = list(range(npts))
    for gi in gen_elem_idx:
        if point_action[gi] is not None:
            continue
        g, emb = elements[gi], table.embeds[gi]
        row = []
        for pi in range(npts):
            p = exceptional[pi]
            raw_a = g.entries[0] * p.a + g.entries[1] * p.b
            raw_b = g.entries[2] * p.a + g.entries[3] * p.b
            k = lookup.find_raw(raw_a, raw_b, _emb_apply(emb, lookup.embeds[pi]))
            if k is None:
                raise ModelError("group action escaped the exceptional locus")
            row.append(k)
        point_action[gi] = row
    for g in range(size):
        if point_action[g] is not None:
            continue
        p, j = parents[g]
        row_p, row_s = point_action[p], point_action[gen_elem_idx[j]]
        point_action[g] = [row_p[row_s[q]] for q in range(npts)]
    point_action = [row for row in point_action]  # type: ignore[list-item]

    stabilizers = [
        [gi for gi in range(size) if point_action[gi][pi] == pi] for pi in range(npts)
    ]
    if any(len(s) < 2 for s in stabilizers):
        raise ModelError("a seed point has trivial stabiliser")

    orbit_id = [-1] * npts
    orbits: list[list[int]] = []
    for pi in range(npts):
        if orbit_id[pi] >= 0:
            continue
        oid = len(orbits)
        stack, members = [pi], []
        orbit_id[pi] = oid
        while stack:
            cur = stack.pop()
            members.append(cur)
            for gi in range(size):
                img = point_action[gi][cur]
                if orbit_id[img] < 0:
                    orbit_id[img] = oid
                    stack.append(img)
        orbits.append(sorted(members))

    at_partner = []
    for pi in range(npts):
        q = exceptional[pi].antipode()
        k = lookup.find_raw(q.a, q.b, q.embed())
        if k is None or k == pi:
            raise ModelError("antipodal pairing failed on the exceptional locus")
        at_partner.append(k)

    p_half = [
        pi
        for pi in range(npts)
        if exceptional[pi].text() < exceptional[at_partner[pi]].text()
    ]

    data = FiniteGroupData(
        kind=kind,
        n_param=N,
        field_order=m,
        elements=elements,
        mult=mult,
        inv=inv,
        identity=identity,
        exceptional=exceptional,
        p_half=p_half,
        at_partner=at_partner,
        stabilizers=stabilizers,
        orbit_id=orbit_id,
        orbits=orbits,
        point_action=point_action,
        model_description=desc,
        _embedded=None,
        _embedded_points=None,
    )
    _verify_group(data)
    return data


def _verify_group(G: FiniteGroupData) -> None:
    npts = len(G.exceptional)
    size = G.order
    # Fixed-point structure of Prop-style bookkeeping: every nontrivial
    # element fixes exactly two exceptional points, swapped by the antipode.
    for gi in range(size):
        if gi == G.identity:
            continue
        fixed = [pi for pi in range(npts) if G.point_action[gi][pi] == pi]
        if len(fixed) != 2:
            raise ModelError(f"element {gi} fixes {len(fixed)} points")
        if G.at_partner[fixed[0]] != fixed[1]:
            raise ModelError("fixed pair is not an antipodal pair")
    # The half-locus partitions the exceptional set against its antipode.
    half = set(G.p_half)
    if half | {G.at_partner[p] for p in half} != set(range(npts)) or (
        half & {G.at_partner[p] for p in half}
    ):
        raise ModelError("antipodal partition of the exceptional locus failed")
    # Stabiliser supports partition the nontrivial elements.
    seen: set[int] = set()
    for pi in G.p_half:
        nontrivial = {g for g in G.stabilizers[pi] if g != G.identity}
        if seen & nontrivial:
            raise ModelError("stabiliser supports overlap")
        seen |= nontrivial
    if seen != set(range(size)) - {G.identity}:
        raise ModelError("stabiliser supports do not cover the group")
    # Orbit-stabiliser identity on every exceptional point.
    for pi in range(npts):
        orb = len(G.orbits[G.orbit_id[pi]])
        if orb * len(G.stabilizers[pi]) != size:
            raise ModelError("orbit-stabiliser identity failed")
    # Every stabiliser is cyclic: some member generates it.
    for pi in range(npts):
        stab = set(G.stabilizers[pi])
        if not any(_generates(G, g, stab) for g in stab):
            raise ModelError("non-cyclic stabiliser found")


def _generates(G: FiniteGroupData, g: int, target: set[int]) -> bool:
    cur, seen = g, {G.identity}
    while cur not in seen:
        seen.add(cur)
        cur = G.mult[cur][g]
    return seen == target


@lru_cache(maxsize=None)
def group(kind: str, N: int | None = None) -> FiniteGroupData:
    """Cached access to build_group."""
    return build_group(kind, N)
