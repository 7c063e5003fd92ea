import random

import pytest

from powertrees.gf import Gf
from powertrees.graphs import complete_graph, universal_vertices
from powertrees.groups import (
    FiniteGroup,
    GroupConstructionError,
    GroupSpec,
    build_group,
    epo_class_counts,
    power_graph,
    validate_cayley_table,
)
from powertrees.linalg import kappa_matrix_tree
from powertrees.numth import euler_phi, is_prime


def build(text):
    return build_group(GroupSpec.parse(text))


# --- finite field sanity ---


def test_gf_smallest_irreducible():
    assert Gf(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert Gf(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert Gf(5, 1).modulus == (0, 1)


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3), (5, 1)])
def test_gf_field_axioms_sampled(p, n):
    f = Gf(p, n)
    q = f.q
    rng = random.Random(q)
    for _ in range(200):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(a, f.neg(a)) == 0
    for a in range(1, q):
        assert f.mul(a, f.inv(a)) == 1
        assert (q - 1) % f.multiplicative_order(a) == 0


def test_gf_element_wrapper():
    f = Gf(3, 2)
    a = f.element(5)
    b = f.element(7)
    assert (a + b - b).value == 5
    assert (a * b / b).value == 5
    assert (a ** (f.q - 1)).value == 1


# --- family constructions ---


@pytest.mark.parametrize(
    "text,order",
    [
        ("cyclic:12", 12),
        ("elementary:3:2", 9),
        ("dihedral:4", 8),
        ("quaternion:3", 8),
        ("quaternion:4", 16),
        ("heisenberg:3", 27),
        ("extraspecial:3", 27),
        ("psl2:2:2", 60),
        ("psl2:5:1", 60),
        ("psl2:7:1", 168),
        ("frobenius:2:3", 6),
        ("frobenius:3:7", 21),
    ],
)
def test_advertised_orders(text, order):
    assert build(text).order == order


def test_group_axioms_spot_checks():
    rng = random.Random(0)
    for text in ("cyclic:12", "dihedral:5", "quaternion:4", "heisenberg:3",
                 "extraspecial:3", "frobenius:2:5", "psl2:2:2"):
        g = build(text)
        e = g.identity
        assert e == 0
        n = g.order
        for x in range(n):
            assert g.mul(e, x) == x and g.mul(x, e) == x
            assert g.mul(x, g.inverse(x)) == e
            assert n % g.element_orders[x] == 0  # Lagrange
            assert len(g.cyclic_subgroups[x]) == g.element_orders[x]
            assert g.power(x, n) == e
        for _ in range(200):
            a, b, c = (rng.randrange(n) for _ in range(3))
            assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


def test_quaternion_has_unique_involution():
    for n in (3, 4, 5):
        g = build(f"quaternion:{n}")
        assert sum(1 for x in range(g.order) if g.element_orders[x] == 2) == 1


def test_heisenberg_has_exponent_p():
    g = build("heisenberg:3")
    orders = [g.element_orders[x] for x in range(g.order)]
    assert orders.count(3) == 26 and orders.count(1) == 1


def test_extraspecial_exp_p2_order_profile():
    # p^2 - 1 elements of order p, the rest of order p^2
    g = build("extraspecial:3")
    orders = [g.element_orders[x] for x in range(g.order)]
    assert orders.count(1) == 1
    assert orders.count(3) == 8
    assert orders.count(9) == 18


def test_frobenius_is_epo_and_nonabelian():
    for p, q in ((2, 3), (3, 7), (5, 11), (2, 5)):
        g = build(f"frobenius:{p}:{q}")
        assert all(is_prime(g.element_orders[x]) for x in range(1, g.order))
        assert any(
            g.mul(a, b) != g.mul(b, a) for a in range(g.order) for b in range(g.order)
        )


def test_spec_validation_errors():
    for bad in (
        "cyclic:0",
        "elementary:4:2",
        "quaternion:2",
        "heisenberg:2",
        "extraspecial:2",
        "psl2:2:1",
        "psl2:3:1",
        "frobenius:3:5",  # 3 does not divide 4
        "frobenius:5:3",  # p > q
        "nosuch:1",
    ):
        with pytest.raises(GroupConstructionError):
            GroupSpec.parse(bad)


def test_spec_string_roundtrip():
    spec = GroupSpec.parse("psl2:3:2")
    assert str(spec) == "psl2:3:2"
    assert GroupSpec.parse("extraspecial:3").family == "extraspecial_exp_p2"
    assert GroupSpec.parse("frobenius:2:3").family == "frobenius_pq"


# --- power graphs ---


def test_power_graph_cyclic_prime_power_is_complete():
    assert power_graph(build("cyclic:8")) == complete_graph(8)
    assert power_graph(build("cyclic:9")) == complete_graph(9)


def test_power_graph_klein_four_is_star():
    pg = power_graph(build("elementary:2:2"))
    assert sorted(pg.degree(v) for v in range(4)) == [1, 1, 1, 3]


def test_power_graph_quaternion8_structure():
    pg = power_graph(build("quaternion:3"))
    assert (pg.n, pg.edge_count) == (8, 16)
    assert len(universal_vertices(pg)) == 2
    assert pg.degree_sequence() == (7, 7, 3, 3, 3, 3, 3, 3)


def test_power_graph_connected_identity_universal():
    for text in ("cyclic:10", "dihedral:6", "quaternion:4", "heisenberg:3",
                 "extraspecial:3", "frobenius:2:5", "elementary:2:3"):
        g = build(text)
        pg = power_graph(g)
        assert pg.is_connected()
        assert g.identity in universal_vertices(pg)


def test_power_graph_subset():
    g = build("dihedral:4")
    rotations = [x for x in range(g.order) if g.element_orders[x] in (1, 2, 4)][:4]
    sub = power_graph(g, range(4))
    assert sub.n == 4
    with pytest.raises(ValueError):
        power_graph(g, [1, 2, 3])  # identity missing


def test_power_graph_subset_of_frobenius_complement():
    # the point stabilizer inside the order-21 group is cyclic of order 3, and
    # its subset power graph is the complete graph on those elements
    g = build("frobenius:3:7")
    stab = sorted(g.cyclic_subgroups[next(
        x for x in range(g.order) if g.element_orders[x] == 3
    )])
    sub = power_graph(g, stab)
    assert sub == complete_graph(3)


def test_adjacency_is_order_monotone():
    # adjacent vertices of equal element order generate the same subgroup
    for text in ("cyclic:12", "quaternion:4", "frobenius:3:7", "extraspecial:3"):
        g = build(text)
        pg = power_graph(g)
        for u, v in pg.edges():
            if g.element_orders[u] == g.element_orders[v]:
                assert g.cyclic_subgroups[u] == g.cyclic_subgroups[v]


def test_universal_vertex_counts():
    assert len(universal_vertices(power_graph(build("cyclic:6")))) == 1 + euler_phi(6)
    assert len(universal_vertices(power_graph(build("quaternion:4")))) == 2
    assert len(universal_vertices(power_graph(build("cyclic:12")))) == 1 + euler_phi(12)


def test_dihedral_kappa_equals_cyclic_kappa():
    # the dihedral power graph is the cyclic one plus pendant reflections
    for n in (3, 4, 5, 6):
        kd = kappa_matrix_tree(power_graph(build(f"dihedral:{n}")))
        kc = kappa_matrix_tree(power_graph(build(f"cyclic:{n}")))
        assert kd == kc


# --- EPO classification ---


def test_epo_counts_elementary():
    assert epo_class_counts(build("elementary:3:2")) == {3: 4}


def test_epo_counts_a5_against_enumeration():
    g = build("psl2:2:2")
    # independent oracle: count elements of each prime order by brute-force
    # powering, then divide by phi(p)
    by_order = {}
    for x in range(1, g.order):
        y, k = x, 1
        while y != 0:
            y = g.mul(y, x)
            k += 1
        by_order[k] = by_order.get(k, 0) + 1
    expected = {p: cnt // (p - 1) for p, cnt in by_order.items()}
    assert expected == {2: 15, 3: 10, 5: 6}
    assert epo_class_counts(g) == expected


def test_epo_counts_s3():
    assert epo_class_counts(build("frobenius:2:3")) == {2: 3, 3: 1}


def test_epo_rejects_composite_order_with_witness():
    with pytest.raises(ValueError, match="composite order 4"):
        epo_class_counts(build("cyclic:4"))


# --- Cayley table ingestion ---


def write_table(tmp_path, table):
    path = tmp_path / "g.tbl"
    lines = [str(len(table))] + [" ".join(map(str, row)) for row in table]
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def test_cayley_table_roundtrip(tmp_path):
    src = build("dihedral:3")
    path = write_table(tmp_path, [list(row) for row in src.table])
    g = build_group(GroupSpec.parse(f"table:{path}"))
    assert g.order == 6
    assert sorted(g.element_orders) == sorted(src.element_orders)
    assert kappa_matrix_tree(power_graph(g)) == 3


def test_cayley_table_identity_axiom(tmp_path):
    path = write_table(tmp_path, [[1, 0], [0, 1]])
    with pytest.raises(GroupConstructionError, match="identity"):
        build_group(GroupSpec.parse(f"table:{path}"))


def test_cayley_table_closure_axiom(tmp_path):
    path = write_table(tmp_path, [[0, 1], [1, 7]])
    with pytest.raises(GroupConstructionError, match="closure"):
        build_group(GroupSpec.parse(f"table:{path}"))


def test_cayley_table_inverse_axiom():
    with pytest.raises(GroupConstructionError, match="inverse"):
        validate_cayley_table([[0, 1, 2], [1, 1, 2], [2, 2, 2]])


def test_cayley_table_associativity_axiom():
    # Z5 table with two entries swapped: identity and inverses survive,
    # associativity does not
    table = [[(a + b) % 5 for b in range(5)] for a in range(5)]
    table[1][1], table[1][2] = table[1][2], table[1][1]
    with pytest.raises(GroupConstructionError, match="associativity"):
        validate_cayley_table(table)


def test_large_table_sampled_associativity():
    # above the exhaustive-check bound the validation still accepts real groups
    g = build("cyclic:300")
    validate_cayley_table([list(row) for row in g.table])
