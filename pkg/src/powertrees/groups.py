"""Finite groups: construction of the named families, Cayley-table ingestion,
element orders, cyclic subgroups, and power graphs.

Every group is materialized in a concrete representation (residues, vectors
over GF(p), normal forms, matrices over GF(q), affine maps) and then flattened
to an index multiplication table so that everything downstream sees one
uniform interface.  Element 0 is always the identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gf import Gf
from .graphs import SimpleGraph
from .numth import is_prime


class GroupConstructionError(ValueError):
    """Invalid family parameters or an input table that is not a group."""


_FAMILIES = (
    "cyclic",
    "elementary",
    "dihedral",
    "quaternion",
    "heisenberg",
    "extraspecial_exp_p2",
    "psl2",
    "frobenius_pq",
    "cayley_table",
)


@dataclass(frozen=True)
class GroupSpec:
    """A named group family plus parameters, e.g. cyclic(12) or psl2(3, 2)."""

    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise GroupConstructionError(f"unknown family {self.family!r}")
        validator = _VALIDATORS[self.family]
        validator(*self.params)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse the flat CLI grammar family:param[:param], e.g. 'psl2:3:2'.

        'frobenius' and 'extraspecial' are accepted as short aliases, and
        'table:PATH' names a Cayley-table file.
        """
        parts = text.split(":")
        family = {
            "frobenius": "frobenius_pq",
            "extraspecial": "extraspecial_exp_p2",
            "table": "cayley_table",
        }.get(parts[0], parts[0])
        if family == "cayley_table":
            if len(parts) < 2:
                raise GroupConstructionError("table spec needs a file path: table:PATH")
            return cls(family, (":".join(parts[1:]),))
        try:
            params = tuple(int(x) for x in parts[1:])
        except ValueError as exc:
            raise GroupConstructionError(f"bad group spec {text!r}: {exc}") from None
        return cls(family, params)

    def __str__(self) -> str:
        return ":".join([self.family, *map(str, self.params)])


def _need_prime(p, what="p"):
    if not isinstance(p, int) or not is_prime(p):
        raise GroupConstructionError(f"{what} = {p!r} must be prime")


def _need_odd_prime(p):
    _need_prime(p)
    if p == 2:
        raise GroupConstructionError("p must be an odd prime")


def _v_cyclic(n=None):
    if not isinstance(n, int) or n < 1:
        raise GroupConstructionError(f"cyclic(n) needs an integer n >= 1, got {n!r}")


def _v_elementary(p=None, n=None):
    _need_prime(p)
    if not isinstance(n, int) or n < 1:
        raise GroupConstructionError("elementary(p, n) needs n >= 1")


def _v_dihedral(n=None):
    if not isinstance(n, int) or n < 2:
        raise GroupConstructionError("dihedral(n) needs n >= 2 (order 2n)")


def _v_quaternion(n=None):
    if not isinstance(n, int) or n < 3:
        raise GroupConstructionError("quaternion(n) needs n >= 3 (order 2^n)")


def _v_heisenberg(p=None):
    _need_odd_prime(p)


def _v_extraspecial(p=None):
    _need_odd_prime(p)


def _v_psl2(p=None, n=None):
    _need_prime(p)
    if not isinstance(n, int) or n < 1:
        raise GroupConstructionError("psl2(p, n) needs n >= 1")
    if p**n < 4:
        raise GroupConstructionError(f"psl2 needs q = p^n >= 4, got q = {p ** n}")


def _v_frobenius(p=None, q=None):
    _need_prime(p)
    _need_prime(q, "q")
    if not p < q:
        raise GroupConstructionError(f"frobenius_pq needs p < q, got p={p}, q={q}")
    if (q - 1) % p != 0:
        raise GroupConstructionError(f"frobenius_pq needs p | q-1, got p={p}, q={q}")


def _v_cayley(path=None):
    if not isinstance(path, str) or not path:
        raise GroupConstructionError("cayley_table needs a file path")


_VALIDATORS = {
    "cyclic": _v_cyclic,
    "elementary": _v_elementary,
    "dihedral": _v_dihedral,
    "quaternion": _v_quaternion,
    "heisenberg": _v_heisenberg,
    "extraspecial_exp_p2": _v_extraspecial,
    "psl2": _v_psl2,
    "frobenius_pq": _v_frobenius,
    "cayley_table": _v_cayley,
}


class FiniteGroup:
    """A finite group flattened to an index table, with per-element orders and
    cyclic subgroups cached."""

    __slots__ = (
        "name",
        "order",
        "identity",
        "table",
        "element_names",
        "element_orders",
        "cyclic_subgroups",
    )

    def __init__(self, name, table, element_names=None, identity=0):
        n = len(table)
        self.name = name
        self.order = n
        self.identity = identity
        self.table = tuple(tuple(row) for row in table)
        self.element_names = (
            tuple(element_names) if element_names is not None else tuple(map(str, range(n)))
        )
        orders, subgroups = [], []
        for g in range(n):
            members = [identity]
            x = g
            while x != identity:
                members.append(x)
                x = self.table[x][g]
            orders.append(len(members))
            subgroups.append(frozenset(members))
        self.element_orders = tuple(orders)
        self.cyclic_subgroups = tuple(subgroups)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, g: int, k: int) -> int:
        """g**k by repeated squaring (k may be any integer)."""
        if k < 0:
            g, k = self.inverse(g), -k
        out = self.identity
        base = g
        while k:
            if k & 1:
                out = self.table[out][base]
            base = self.table[base][base]
            k >>= 1
        return out

    def inverse(self, g: int) -> int:
        return self.power(g, self.element_orders[g] - 1)

    def element_order(self, g: int) -> int:
        return self.element_orders[g]

    def cyclic_subgroup(self, g: int) -> frozenset:
        return self.cyclic_subgroups[g]

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _flatten(name, elements, op, names=None):
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(name, table, names)


def _build_cyclic(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(f"cyclic:{n}", table)


def _build_elementary(p: int, n: int) -> FiniteGroup:
    def decode(v):
        out = []
        for _ in range(n):
            out.append(v % p)
            v //= p
        return out

    q = p**n
    elements = list(range(q))
    coeffs = [decode(v) for v in elements]

    def encode(cs):
        v = 0
        for c in reversed(cs):
            v = v * p + c
        return v

    table = [
        [encode([(a + b) % p for a, b in zip(ca, cb)]) for cb in coeffs]
        for ca in coeffs
    ]
    names = ["(" + ",".join(map(str, c)) + ")" for c in coeffs]
    return FiniteGroup(f"elementary:{p}:{n}", table, names)


def _build_dihedral(n: int) -> FiniteGroup:
    # elements r^a s^b, index = b*n + a; s r = r^-1 s
    def op(x, y):
        a1, b1 = x
        a2, b2 = y
        a = (a1 + (a2 if b1 == 0 else -a2)) % n
        return (a, (b1 + b2) % 2)

    elements = [(a, b) for b in (0, 1) for a in range(n)]
    names = [f"r{a}" if b == 0 else f"sr{a}" for a, b in elements]
    return _flatten(f"dihedral:{n}", elements, op, names)


def _build_quaternion(n: int) -> FiniteGroup:
    # x^a y^b with a mod 2^(n-1), b in {0,1}; y^2 = x^(2^(n-2)), y x = x^-1 y
    half = 2 ** (n - 1)
    central = 2 ** (n - 2)

    def op(u, v):
        a1, b1 = u
        a2, b2 = v
        a = (a1 + (a2 if b1 == 0 else -a2)) % half
        if b1 and b2:
            return ((a + central) % half, 0)
        return (a, b1 ^ b2)

    elements = [(a, b) for b in (0, 1) for a in range(half)]
    names = [f"x{a}" if b == 0 else f"x{a}y" for a, b in elements]
    return _flatten(f"quaternion:{n}", elements, op, names)


def _build_heisenberg(p: int) -> FiniteGroup:
    # lower unitriangular 3x3 over GF(p): (x, y, z) * (x', y', z') =
    # (x+x', y+y', z+z'+y*x')
    def op(u, v):
        return ((u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[1] * v[0]) % p)

    elements = [(x, y, z) for x in range(p) for y in range(p) for z in range(p)]
    names = [f"({x},{y},{z})" for x, y, z in elements]
    return _flatten(f"heisenberg:{p}", elements, op, names)


def _build_extraspecial_exp_p2(p: int) -> FiniteGroup:
    # affine maps t -> (1+c*p)*t + b on Z_{p^2}; composition
    # (a1,b1)(a2,b2) = t -> a1*(a2*t + b2) + b1
    mod = p * p

    def op(u, v):
        c1, b1 = u
        c2, b2 = v
        a1 = 1 + c1 * p
        a = (a1 * (1 + c2 * p)) % mod
        return ((a - 1) // p, (a1 * b2 + b1) % mod)

    elements = [(c, b) for c in range(p) for b in range(mod)]
    names = [f"t->{1 + c * p}t+{b}" for c, b in elements]
    return _flatten(f"extraspecial_exp_p2:{p}", elements, op, names)


def _build_psl2(p: int, n: int) -> FiniteGroup:
    field = Gf(p, n)
    q = field.q
    mul, add, neg = field.mul, field.add, field.neg

    def canonical(m):
        # the first nonzero entry is the first place where m and -m differ
        negated = (neg(m[0]), neg(m[1]), neg(m[2]), neg(m[3]))
        for x, y in zip(m, negated):
            if x != y:
                return m if x < y else negated
        return m

    one = 1  # encoding of the field unit
    seen = set()
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if add(mul(a, d), neg(mul(b, c))) == one:
                        seen.add(canonical((a, b, c, d)))
    identity = canonical((one, 0, 0, one))
    elements = [identity] + sorted(seen - {identity})

    def op(m1, m2):
        a1, b1, c1, d1 = m1
        a2, b2, c2, d2 = m2
        return canonical(
            (
                add(mul(a1, a2), mul(b1, c2)),
                add(mul(a1, b2), mul(b1, d2)),
                add(mul(c1, a2), mul(d1, c2)),
                add(mul(c1, b2), mul(d1, d2)),
            )
        )

    names = [f"[{a},{b};{c},{d}]" for a, b, c, d in elements]
    group = _flatten(f"psl2:{p}:{n}", elements, op, names)
    k = 2 if p > 2 else 1
    expected = q * (q - 1) * (q + 1) // k
    if group.order != expected:
        raise GroupConstructionError(
            f"psl2({p},{n}) built {group.order} elements, expected {expected}"
        )
    return group


def _build_frobenius_pq(p: int, q: int) -> FiniteGroup:
    # Z_q semidirect Z_p, realized as maps t -> a^i * t + b on Z_q with a the
    # smallest residue of multiplicative order p mod q.
    a = None
    for cand in range(2, q):
        x, k = cand, 1
        while x != 1:
            x = x * cand % q
            k += 1
        if k == p:
            a = cand
            break
    if a is None:  # p | q-1 guarantees existence
        raise GroupConstructionError(f"no element of order {p} mod {q}")
    powers = [pow(a, i, q) for i in range(p)]

    def op(u, v):
        b1, i1 = u
        b2, i2 = v
        return ((powers[i1] * b2 + b1) % q, (i1 + i2) % p)

    elements = [(b, i) for i in range(p) for b in range(q)]
    names = [f"t->{powers[i]}t+{b}" for b, i in elements]
    return _flatten(f"frobenius_pq:{p}:{q}", elements, op, names)


def _parse_cayley_text(text: str) -> list[list[int]]:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GroupConstructionError("empty Cayley-table input")
    n = int(lines[0])
    if len(lines) != n + 1:
        raise GroupConstructionError(f"expected {n} table rows, got {len(lines) - 1}")
    table = []
    for ln in lines[1:]:
        row = [int(x) for x in ln.split()]
        if len(row) != n:
            raise GroupConstructionError(f"row has {len(row)} entries, expected {n}")
        if any(not 0 <= x < n for x in row):
            raise GroupConstructionError("closure violated: entry out of range")
        table.append(row)
    return table


def validate_cayley_table(table: list[list[int]]) -> None:
    """Check the group axioms, naming the failed axiom on error.

    Associativity is checked exhaustively for n <= 256 and by seeded sampling
    of 10*n^2 triples above that.
    """
    n = len(table)
    e = 0
    for g in range(n):
        if table[e][g] != g or table[g][e] != g:
            raise GroupConstructionError(
                f"identity axiom violated: element 0 is not an identity for {g}"
            )
    for g in range(n):
        if not any(table[g][h] == e and table[h][g] == e for h in range(n)):
            raise GroupConstructionError(f"inverse axiom violated: {g} has no inverse")
    if n <= 256:
        triples = (
            (a, b, c) for a in range(n) for b in range(n) for c in range(n)
        )
    else:
        rng = random.Random(0)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(10 * n * n)
        )
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupConstructionError(
                f"associativity violated at ({a}, {b}, {c})"
            )


def _build_cayley_table(path: str) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        table = _parse_cayley_text(fh.read())
    validate_cayley_table(table)
    return FiniteGroup(f"cayley_table:{path}", table)


_BUILDERS = {
    "cyclic": _build_cyclic,
    "elementary": _build_elementary,
    "dihedral": _build_dihedral,
    "quaternion": _build_quaternion,
    "heisenberg": _build_heisenberg,
    "extraspecial_exp_p2": _build_extraspecial_exp_p2,
    "psl2": _build_psl2,
    "frobenius_pq": _build_frobenius_pq,
    "cayley_table": _build_cayley_table,
}


def build_group(spec: GroupSpec) -> FiniteGroup:
    return _BUILDERS[spec.family](*spec.params)


def power_graph(group: FiniteGroup, subset=None) -> SimpleGraph:
    """Power graph on `subset` (default: all of the group): distinct u, v are
    adjacent iff one lies in the cyclic subgroup generated by the other."""
    if subset is None:
        verts = list(range(group.order))
    else:
        verts = sorted(set(subset))
        if group.identity not in verts:
            raise ValueError("vertex subset must contain the identity")
        if verts[0] < 0 or verts[-1] >= group.order:
            raise ValueError("vertex subset out of range")
    cyc = group.cyclic_subgroups
    edges = []
    for i, u in enumerate(verts):
        cu = cyc[u]
        for j in range(i + 1, len(verts)):
            v = verts[j]
            if v in cu or u in cyc[v]:
                edges.append((i, j))
    labels = [group.element_names[v] for v in verts]
    return SimpleGraph(len(verts), edges, labels)


def epo_class_counts(group: FiniteGroup) -> dict[int, int]:
    """For a group in which every non-identity element has prime order, the
    number of cyclic subgroups of each occurring prime order.

    Raises on a non-EPO group, naming a witness element of composite order.
    """
    counts: dict[int, set] = {}
    for g in range(group.order):
        if g == group.identity:
            continue
        o = group.element_orders[g]
        if not is_prime(o):
            raise ValueError(
                f"not an EPO group: element {group.element_names[g]!r} has composite order {o}"
            )
        counts.setdefault(o, set()).add(group.cyclic_subgroups[g])
    result = {p: len(subs) for p, subs in sorted(counts.items())}
    total = sum(c * (p - 1) for p, c in result.items())
    if total != group.order - 1:
        raise RuntimeError("cyclic subgroup count mismatch")  # pragma: no cover
    return result
