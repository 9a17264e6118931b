"""Finite groups as explicit multiplication tables.

Elements are indices 0..order-1 with 0 the identity. Everything downstream
(classes, characters, ramification data) works through these tables, so all
orderings here are deterministic: presets document their element order,
table specs keep the given order, permutation specs sort images
lexicographically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm

from .errors import GroupError, TheoremViolation

DEFAULT_ORDER_BOUND = 10_000


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    __slots__ = ("order", "table", "name", "_inv", "_orders", "_exponent", "_classes", "_class_of")

    def __init__(self, table, name: str | None = None, check_associativity: bool = False):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise GroupError("empty multiplication table")
        for row in table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise GroupError("multiplication table is not a square over 0..order-1")
        for a in range(n):
            if table[0][a] != a or table[a][0] != a:
                raise GroupError("element 0 is not a two-sided identity")
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == 0:
                    if table[b][a] != 0:
                        raise GroupError(f"one-sided inverse at element {a}")
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupError(f"element {a} has no inverse")
        if check_associativity:
            for a in range(n):
                ra = table[a]
                for b in range(n):
                    ab = ra[b]
                    rb = table[b]
                    for c in range(n):
                        if table[ab][c] != ra[rb[c]]:
                            raise GroupError(f"non-associative triple ({a},{b},{c})")
        self.order = n
        self.table = table
        self.name = name or f"group{n}"
        self._inv = tuple(inv)
        self._orders = None
        self._exponent = None
        self._classes = None
        self._class_of = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, x: int, g: int) -> int:
        """x g x^-1."""
        return self.table[self.table[x][g]][self._inv[x]]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self._inv[g], -k
        out, base = 0, g
        while k:
            if k & 1:
                out = self.table[out][base]
            base = self.table[base][base]
            k >>= 1
        return out

    def element_order(self, g: int) -> int:
        return self.element_orders()[g]

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            orders = []
            for g in range(self.order):
                k, x = 1, g
                while x != 0:
                    x = self.table[x][g]
                    k += 1
                orders.append(k)
            self._orders = tuple(orders)
        return self._orders

    @property
    def exponent(self) -> int:
        if self._exponent is None:
            self._exponent = lcm(*self.element_orders())
        return self._exponent

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class ConjugacyClass:
    id: int
    members: tuple[int, ...]
    representative: int
    element_order: int


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Classes sorted by (element order, smallest member)."""
    if G._classes is not None:
        return G._classes
    orders = G.element_orders()
    seen = [False] * G.order
    raw = []
    for g in range(G.order):
        if seen[g]:
            continue
        orbit = {G.conj(x, g) for x in range(G.order)}
        for y in orbit:
            seen[y] = True
        members = tuple(sorted(orbit))
        raw.append((orders[g], members[0], members))
    raw.sort()
    classes = [
        ConjugacyClass(i, members, members[0], order)
        for i, (order, _, members) in enumerate(raw)
    ]
    class_of = [0] * G.order
    for cls in classes:
        for g in cls.members:
            class_of[g] = cls.id
    G._classes = classes
    G._class_of = tuple(class_of)
    return classes


def class_of(G: FiniteGroup, g: int) -> int:
    conjugacy_classes(G)
    return G._class_of[g]


def centralizer_order(G: FiniteGroup, g: int) -> int:
    if not 0 <= g < G.order:
        raise GroupError(f"element {g} out of range")
    t = G.table
    return sum(1 for h in range(G.order) if t[h][g] == t[g][h])


def power_class_map(G: FiniteGroup, k: int) -> tuple[int, ...]:
    """The permutation of class ids induced by C -> C^k, gcd(k, exponent) = 1."""
    if gcd(k, G.exponent) != 1:
        raise GroupError(f"power {k} is not coprime to the exponent {G.exponent}")
    classes = conjugacy_classes(G)
    image = tuple(class_of(G, G.power(c.representative, k)) for c in classes)
    if sorted(image) != list(range(len(classes))):
        raise TheoremViolation("power map is not a permutation of classes")
    return image


def closure(G: FiniteGroup, gens) -> frozenset[int]:
    out = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = G.table[a][g]
            if b not in out:
                out.add(b)
                frontier.append(b)
    return frozenset(out)


def is_subgroup(G: FiniteGroup, elems) -> bool:
    s = set(elems)
    if not s or 0 not in s:
        return False
    return all(G.table[a][b] in s for a in s for b in s)


def cyclic_subgroups_up_to_conjugacy(G: FiniteGroup) -> list[tuple[int, int]]:
    """One (generator, order) per conjugacy class of cyclic subgroups.

    Includes the trivial subgroup; sorted by (order, smallest generator).
    """
    orders = G.element_orders()
    gens_of: dict[frozenset[int], int] = {}
    for g in range(G.order):
        sub = closure(G, [g])
        if len(sub) == orders[g]:
            gens_of.setdefault(sub, g)
    remaining = set(gens_of)
    entries = []
    while remaining:
        sub = min(remaining, key=lambda s: (len(s), gens_of[s]))
        orbit = {frozenset(G.conj(x, s) for s in sub) for x in range(G.order)}
        remaining -= orbit
        entries.append((gens_of[sub], len(sub)))
    entries.sort(key=lambda e: (e[1], e[0]))
    return entries


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image_map: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.image_map[g]

    def image(self) -> frozenset[int]:
        return frozenset(self.image_map)


def _validate_hom(G1: FiniteGroup, G2: FiniteGroup, image_map) -> GroupHom:
    if image_map[0] != 0:
        raise GroupError("homomorphism does not fix the identity")
    for a in range(G1.order):
        for b in range(G1.order):
            if image_map[G1.table[a][b]] != G2.table[image_map[a]][image_map[b]]:
                raise GroupError(f"map is not a homomorphism at ({a},{b})")
    return GroupHom(G1, G2, tuple(image_map))


def make_hom(G1: FiniteGroup, G2: FiniteGroup, generator_images: dict[int, int]) -> GroupHom:
    """Extend images of a generating set to a validated homomorphism."""
    known = {0: 0}
    queue = [0]
    items = list(generator_images.items())
    while queue:
        a = queue.pop()
        for g, y in items:
            b = G1.table[a][g]
            img = G2.table[known[a]][y]
            if b in known:
                if known[b] != img:
                    raise GroupError("generator images are inconsistent with relations")
            else:
                known[b] = img
                queue.append(b)
    if len(known) != G1.order:
        raise GroupError("images do not cover a generating set")
    return _validate_hom(G1, G2, [known[a] for a in range(G1.order)])


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)))


def conjugation_hom(G: FiniteGroup, x: int) -> GroupHom:
    return GroupHom(G, G, tuple(G.conj(x, g) for g in range(G.order)))


def power_endomorphism(G: FiniteGroup, k: int) -> GroupHom:
    """g -> g^k; a homomorphism for abelian G."""
    if not G.is_abelian():
        raise GroupError("power maps are endomorphisms only for abelian groups")
    return GroupHom(G, G, tuple(G.power(g, k) for g in range(G.order)))


def is_normal(G: FiniteGroup, elems) -> bool:
    s = set(elems)
    return is_subgroup(G, s) and all(G.conj(x, h) in s for x in range(G.order) for h in s)


def quotient_hom(G: FiniteGroup, normal) -> GroupHom:
    """The projection G -> G/N for a normal subgroup N, cosets sorted by min element."""
    N = sorted(set(normal))
    if not is_normal(G, N):
        raise GroupError("subset is not a normal subgroup")
    coset_of = {}
    cosets = []
    for g in range(G.order):
        if g in coset_of:
            continue
        cs = frozenset(G.table[g][h] for h in N)
        idx = len(cosets)
        cosets.append(cs)
        for x in cs:
            coset_of[x] = idx
    order = sorted(range(len(cosets)), key=lambda i: min(cosets[i]))
    relabel = {old: new for new, old in enumerate(order)}
    reps = [min(cosets[old]) for old in order]
    table = [
        [relabel[coset_of[G.table[a][b]]] for b in reps]
        for a in reps
    ]
    Q = FiniteGroup(table, name=f"{G.name}/N{len(N)}")
    return GroupHom(G, Q, tuple(relabel[coset_of[g]] for g in range(G.order)))


def all_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup, by closure search. Intended for small orders."""
    found = {frozenset([0])}
    queue = [frozenset([0])]
    while queue:
        S = queue.pop()
        for g in range(1, G.order):
            if g in S:
                continue
            T = closure(G, list(S) + [g])
            if T not in found:
                found.add(T)
                queue.append(T)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


class Subgroup:
    """A subgroup of a parent group, with its own relabeled group structure.

    Index 0 of the relabeled group is the parent identity because elements
    are kept in sorted parent order.
    """

    def __init__(self, parent: FiniteGroup, elems):
        elems = tuple(sorted(set(elems)))
        if not is_subgroup(parent, elems):
            raise GroupError("element set is not closed under multiplication")
        self.parent = parent
        self.elements = elems
        self._locate = {g: i for i, g in enumerate(elems)}
        table = [
            [self._locate[parent.table[a][b]] for b in elems]
            for a in elems
        ]
        self.group = FiniteGroup(table, name=f"{parent.name}<{len(elems)}>")

    def to_parent(self, i: int) -> int:
        return self.elements[i]

    def from_parent(self, g: int) -> int:
        return self._locate[g]

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# presets


def _cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], name=f"C{n}")


def _direct_product(A: FiniteGroup, B: FiniteGroup, name: str) -> FiniteGroup:
    nb = B.order
    size = A.order * nb
    table = [
        [
            A.table[x // nb][y // nb] * nb + B.table[x % nb][y % nb]
            for y in range(size)
        ]
        for x in range(size)
    ]
    return FiniteGroup(table, name=name)


def _perm_group_from(perms: set[tuple[int, ...]], name: str, order_bound: int) -> FiniteGroup:
    elems = sorted(perms)
    index = {p: i for i, p in enumerate(elems)}
    table = [
        [index[tuple(p[q[x]] for x in range(len(p)))] for q in elems]
        for p in elems
    ]
    G = FiniteGroup(table, name=name)
    if G.order > order_bound:
        raise GroupError(f"group order {G.order} exceeds the bound {order_bound}")
    return G


def _close_perms(degree: int, gens: list[tuple[int, ...]], order_bound: int) -> set[tuple[int, ...]]:
    ident = tuple(range(degree))
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError(f"generator {g} is not a permutation of 0..{degree - 1}")
    out = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(p[g[x]] for x in range(degree))
            if q not in out:
                if len(out) >= order_bound:
                    raise GroupError(f"generator closure exceeds the order bound {order_bound}")
                out.add(q)
                frontier.append(q)
    return out


def _symmetric(n: int) -> FiniteGroup:
    perms = set(itertools.permutations(range(n)))
    return _perm_group_from(perms, f"S{n}", DEFAULT_ORDER_BOUND)


def _parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _alternating(n: int) -> FiniteGroup:
    perms = {p for p in itertools.permutations(range(n)) if _parity(p) == 0}
    return _perm_group_from(perms, f"A{n}", DEFAULT_ORDER_BOUND)


def _dihedral(n: int) -> FiniteGroup:
    # element t*n + k is x -> (-1)^t x + k on Z/n; rotations first
    def mul(x, y):
        t1, k1 = divmod(x, n)
        t2, k2 = divmod(y, n)
        k = (k1 + (k2 if t1 == 0 else -k2)) % n
        return (t1 ^ t2) * n + k

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    return FiniteGroup(table, name=f"D{n}")


def _quaternion() -> FiniteGroup:
    # index 2*b + s: basis b in (1, i, j, k), sign s (0 -> +, 1 -> -)
    basis = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def mul(x, y):
        b1, s1 = divmod(x, 2)
        b2, s2 = divmod(y, 2)
        s, b = basis[(b1, b2)]
        return 2 * b + (s ^ s1 ^ s2)

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    return FiniteGroup(table, name="Q8")


def _preset(name: str) -> FiniteGroup:
    if name in ("C1", "trivial"):
        return FiniteGroup([[0]], name="C1")
    if name.startswith("C") and name[1:].isdigit():
        n = int(name[1:])
        if 1 <= n <= 30:
            return _cyclic(n)
    if name == "C2xC2":
        return _direct_product(_cyclic(2), _cyclic(2), name)
    if name == "C2xC4":
        return _direct_product(_cyclic(2), _cyclic(4), name)
    if name == "C3xC3":
        return _direct_product(_cyclic(3), _cyclic(3), name)
    if name.startswith("S") and name[1:].isdigit():
        n = int(name[1:])
        if 2 <= n <= 5:
            return _symmetric(n)
    if name.startswith("A") and name[1:].isdigit():
        n = int(name[1:])
        if 3 <= n <= 5:
            return _alternating(n)
    if name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        if 2 <= n <= 12:
            return _dihedral(n)
    if name == "Q8":
        return _quaternion()
    raise GroupError(f"unknown group preset {name!r}")


PRESET_NAMES = (
    ["C%d" % n for n in range(1, 31)]
    + ["C2xC2", "C2xC4", "C3xC3"]
    + ["S%d" % n for n in range(2, 6)]
    + ["A%d" % n for n in range(3, 6)]
    + ["D%d" % n for n in range(2, 13)]
    + ["Q8"]
)


def load_group(spec, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    """Build a group from a spec document.

    Accepts a preset name, or a dict of kind "named", "table"
    (explicit multiplication table, fully validated), or "perm"
    (0-based generator image arrays, closed under products).
    """
    if isinstance(spec, str):
        spec = {"kind": "named", "name": spec}
    if not isinstance(spec, dict) or "kind" not in spec:
        raise GroupError("group spec must be a preset name or a dict with a 'kind'")
    kind = spec["kind"]
    if kind == "named":
        G = _preset(spec["name"])
        if G.order > order_bound:
            raise GroupError(f"group order {G.order} exceeds the bound {order_bound}")
        return G
    if kind == "table":
        table = spec["table"]
        if spec.get("order") not in (None, len(table)):
            raise GroupError("declared order does not match the table size")
        if len(table) > order_bound:
            raise GroupError(f"group order {len(table)} exceeds the bound {order_bound}")
        return FiniteGroup(table, name=spec.get("name"), check_associativity=True)
    if kind == "perm":
        degree = spec["degree"]
        gens = [tuple(g) for g in spec["generators"]]
        perms = _close_perms(degree, gens, order_bound)
        return _perm_group_from(perms, spec.get("name") or f"perm{degree}", order_bound)
    raise GroupError(f"unknown group spec kind {kind!r}")
