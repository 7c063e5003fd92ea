import random

import pytest

from powertrees import formulas as F
from powertrees.graphs import (
    CliqueReplacedSpec,
    clique_replaced,
    complete_graph,
    path_graph,
)
from powertrees.groups import GroupSpec, build_group, epo_class_counts, power_graph
from powertrees.linalg import InternalConsistencyError, kappa_matrix_tree
from powertrees.numth import FactoredNat
from powertrees.verify import connected_labeled_graphs


def det_kappa(text):
    return kappa_matrix_tree(power_graph(build_group(GroupSpec.parse(text))))


def test_kappa_cayley():
    assert F.kappa_cayley(4).value() == 16
    assert F.kappa_cayley(2) == FactoredNat.one()
    assert F.kappa_cayley(1) == FactoredNat.one()
    assert F.kappa_cayley(7) == FactoredNat.prime_power(7, 5)
    assert F.kappa_cayley(7).value() == 16807
    with pytest.raises(ValueError):
        F.kappa_cayley(0)


def test_kappa_quaternion():
    assert F.kappa_quaternion(3) == FactoredNat.prime_power(2, 11)
    assert F.kappa_quaternion(4) == FactoredNat.prime_power(2, 31)
    assert F.kappa_quaternion(5) == FactoredNat.prime_power(2, 81)
    with pytest.raises(ValueError):
        F.kappa_quaternion(2)


def test_kappa_quaternion_matches_determinant():
    for n in (3, 4, 5):
        assert F.kappa_quaternion(n).value() == det_kappa(f"quaternion:{n}")


def test_kappa_epo():
    assert F.kappa_epo({3: 4}) == FactoredNat.prime_power(3, 4)
    assert F.kappa_epo({2: 3, 3: 1}).value() == 3 == det_kappa("frobenius:2:3")
    for k in (1, 5, 50):
        assert F.kappa_epo({2: k}) == FactoredNat.one()
    with pytest.raises(ValueError):
        F.kappa_epo({4: 1})
    with pytest.raises(ValueError):
        F.kappa_epo({3: 0})


def test_kappa_epo_catalog_against_determinant():
    for text in ("elementary:2:2", "elementary:3:2", "elementary:2:3",
                 "heisenberg:3", "frobenius:3:7", "psl2:2:2"):
        group = build_group(GroupSpec.parse(text))
        assert F.kappa_epo(epo_class_counts(group)).value() == det_kappa(text)


def test_clique_replaced_formula_complete_base():
    for t, x in ((2, 1), (2, 3), (3, 2), (4, 1)):
        spec = CliqueReplacedSpec(complete_graph(t), (x,) * t)
        assert F.kappa_clique_replaced_formula(spec).value() == (t * x) ** (t * x - 2)


def test_clique_replaced_formula_divisor_graph_of_6():
    spec = F.divisor_clique_spec(6)
    assert spec.sizes == (2, 2, 1, 1)
    value = F.kappa_clique_replaced_formula(spec)
    assert value.value() == 540
    assert value == FactoredNat(((2, 2), (3, 3), (5, 1)))
    assert kappa_matrix_tree(power_graph(build_group(GroupSpec.parse("cyclic:6")))) == 540


def test_clique_replaced_formula_single_edge():
    spec = CliqueReplacedSpec(path_graph(2), (1, 1))
    assert F.kappa_clique_replaced_formula(spec).value() == 1


def test_smatrix_entries_and_minors():
    # two blocks of sizes (2, 3): the arc convention weighs the head block
    spec = CliqueReplacedSpec(complete_graph(2), (2, 3))
    assert F.smatrix(spec, "arcs") == [[3, -3], [-2, 2]]
    assert F.smatrix(spec, "table") == [[3, -3], [-3, 3]]
    assert F.smatrix_minor_sum(spec, "arcs") == 5
    assert F.smatrix_minor_sum(spec, "table") == 6
    with pytest.raises(ValueError):
        F.smatrix(spec, "nonsense")


def test_kappa_smatrix_examples():
    assert F.kappa_clique_replaced_smatrix(
        CliqueReplacedSpec(path_graph(3), (1, 1, 1))
    ).value() == 1 == kappa_matrix_tree(path_graph(3))
    assert F.kappa_clique_replaced_smatrix(
        CliqueReplacedSpec(complete_graph(2), (2, 3))
    ).value() == 125 == kappa_matrix_tree(complete_graph(5))
    assert F.kappa_clique_replaced_smatrix(
        CliqueReplacedSpec(complete_graph(3), (1, 1, 1))
    ).value() == 3


def test_smatrix_table_convention_disagrees_on_asymmetric_sizes():
    # recorded counterexample: the -x_max entry table gives 150 where the
    # expansion of two blocks (2, 3) is the complete graph on 5 vertices
    spec = CliqueReplacedSpec(complete_graph(2), (2, 3))
    assert F.kappa_clique_replaced_smatrix(spec, "table").value() == 150
    assert kappa_matrix_tree(clique_replaced(spec)) == 125


def test_smatrix_divisor_graph_of_6():
    spec = F.divisor_clique_spec(6)
    assert F.smatrix_minor_sum(spec, "arcs") == 108
    assert F.kappa_clique_replaced_smatrix(spec).value() == 540


def test_equivalence_triangle_sampled():
    rng = random.Random(2024)
    for k in range(2, 6):
        bases = connected_labeled_graphs(k)
        for base in rng.sample(bases, min(6, len(bases))):
            sizes = tuple(rng.randint(1, 4) for _ in range(k))
            spec = CliqueReplacedSpec(base, sizes)
            oracle = kappa_matrix_tree(clique_replaced(spec))
            assert F.clique_replaced_value(spec) == oracle
            assert F.kappa_clique_replaced_smatrix(spec).value() == oracle


def test_path_closed_form_audited_values():
    # the published display: for all-ones sizes on a 3-path it yields 3, while
    # the expanded graph is that same path with a single spanning tree
    assert F.kappa_clique_replaced_path((1, 1, 1)).value() == 3
    assert kappa_matrix_tree(path_graph(3)) == 1
    # sizes (1,2,1): display gives 32, the 4-vertex expansion has 8 trees
    assert F.kappa_clique_replaced_path((1, 2, 1)).value() == 32
    oracle = kappa_matrix_tree(clique_replaced(CliqueReplacedSpec(path_graph(3), (1, 2, 1))))
    assert oracle == 8
    with pytest.raises(ValueError):
        F.kappa_clique_replaced_path((2, 2))
    # two blocks fall back to the complete-graph count
    assert F.kappa_cayley(4).value() == 16 == kappa_matrix_tree(
        clique_replaced(CliqueReplacedSpec(path_graph(2), (2, 2)))
    )


def test_path_closed_form_overshoots_by_vertex_count():
    rng = random.Random(3)
    for k in (3, 4, 5):
        sizes = tuple(rng.randint(1, 4) for _ in range(k))
        formula = F.kappa_clique_replaced_path(sizes).value()
        oracle = kappa_matrix_tree(clique_replaced(CliqueReplacedSpec(path_graph(k), sizes)))
        assert formula == oracle * sum(sizes)


def test_kappa_cyclic_values():
    assert F.kappa_cyclic(1) == FactoredNat.one()
    assert F.kappa_cyclic(8) == FactoredNat.prime_power(2, 18)
    assert F.kappa_cyclic(8).value() == 8**6
    assert F.kappa_cyclic(6).value() == 540
    with pytest.raises(ValueError):
        F.kappa_cyclic(0)


def test_kappa_cyclic_matches_determinant_sampled():
    for n in (2, 6, 10, 12, 18, 20, 30, 45):
        assert F.kappa_cyclic(n).value() == det_kappa(f"cyclic:{n}")


def test_kappa_psl2_paper_constants():
    assert F.kappa_psl2(2, 2) == FactoredNat(((3, 10), (5, 18)))
    assert F.kappa_psl2(7, 1) == FactoredNat(((2, 84), (3, 28), (7, 40)))
    assert F.kappa_psl2(3, 2) == FactoredNat(((2, 180), (3, 40), (5, 108)))
    # the two constructions of the order-60 simple group agree
    assert F.kappa_psl2(5, 1) == F.kappa_psl2(2, 2)


def test_kappa_psl2_excluded_parameters():
    for p, n in ((2, 1), (3, 1)):
        with pytest.raises(ValueError, match="excluded"):
            F.kappa_psl2(p, n)
    with pytest.raises(ValueError):
        F.kappa_psl2(4, 1)


def test_kappa_heisenberg():
    assert F.kappa_heisenberg(3) == FactoredNat.prime_power(3, 13)
    assert F.kappa_heisenberg(5) == FactoredNat.prime_power(5, 93)
    assert F.kappa_heisenberg(3).value() == det_kappa("heisenberg:3")
    for bad in (2, 9):
        with pytest.raises(ValueError):
            F.kappa_heisenberg(bad)


def test_extraspecial_verdict_p3():
    verdict = F.extraspecial_exponent_verdict(3)
    assert verdict.value == FactoredNat.prime_power(3, 49)
    assert verdict.candidate_exponents == (46, 47)
    assert verdict.matches == (False, False)
    # ground truth from the determinant oracle on the constructed group:
    # 3^37 * 7^2, so the published clique form misses the actual graph
    det = det_kappa("extraspecial:3")
    assert det == 3**37 * 7**2
    assert det != verdict.value.value()


def test_extraspecial_structural_value_general_p():
    # the spectral value of K(p) * (p+1)#K(p^2-p) is p**(2p^3-5) for any odd
    # prime, which matches neither circulating candidate exponent
    for p in (3, 5, 7):
        verdict = F.extraspecial_exponent_verdict(p)
        assert verdict.value == FactoredNat.prime_power(p, 2 * p**3 - 5)
        assert verdict.matches == (False, False)


def test_extraspecial_true_power_graph_kappa():
    # the constructed group decomposes as identity joined to [the center-side
    # block plus p isolated small cliques]; its count for p=3, frozen from the
    # determinant oracle, factors as 7^2 * 3^37
    from powertrees.spectra import kappa_from_spectrum, parse_expr, spectrum

    true_form = parse_expr("K(1)*((K(2)*3#K(6))+3#K(2))")
    assert kappa_from_spectrum(spectrum(true_form)).value() == det_kappa("extraspecial:3")


def test_kappa_frobenius_general_form():
    # order 6: kernel of order 3 contributes 3, complement of order 2
    # contributes 1 per kernel element
    assert F.kappa_frobenius(F.kappa_cyclic(3), F.kappa_cyclic(2), 3).value() == 3
    assert F.kappa_frobenius(
        F.kappa_cyclic(7), F.kappa_cyclic(3), 7
    ) == F.kappa_frobenius_pq(3, 7)
    with pytest.raises(ValueError):
        F.kappa_frobenius(F.kappa_cyclic(3), F.kappa_cyclic(2), 0)


def test_kappa_frobenius_pq_values():
    assert F.kappa_frobenius_pq(2, 3).value() == 3
    assert F.kappa_frobenius_pq(3, 7) == FactoredNat(((3, 7), (7, 5)))
    assert F.kappa_frobenius_pq(5, 11) == FactoredNat(((5, 33), (11, 9)))
    with pytest.raises(ValueError):
        F.kappa_frobenius_pq(3, 5)


def test_kappa_frobenius_pq_matches_determinant():
    for p, q in ((2, 3), (3, 7), (5, 11)):
        assert F.kappa_frobenius_pq(p, q).value() == det_kappa(f"frobenius:{p}:{q}")


def test_ti_cover_product():
    assert F.ti_cover_product([FactoredNat.prime_power(3, 10)]) == FactoredNat.prime_power(3, 10)
    assert F.ti_cover_product(
        [FactoredNat.prime_power(7, 1)] * 4
    ) == FactoredNat.prime_power(7, 4)
    assembled = F.ti_cover_product(
        [F.kappa_epo({2: 3}) ** 5, F.kappa_cyclic(3) ** 10, F.kappa_cyclic(5) ** 6]
    )
    assert assembled == FactoredNat(((3, 10), (5, 18)))


def test_universal_divisibility_across_power_graphs():
    # graphs computed in this suite with 1 <= m < n universal vertices have
    # counts divisible by n**(m-1)
    from powertrees.graphs import universal_vertices

    for text in ("cyclic:6", "cyclic:12", "quaternion:3", "quaternion:4",
                 "frobenius:3:7", "heisenberg:3", "extraspecial:3"):
        pg = power_graph(build_group(GroupSpec.parse(text)))
        m = len(universal_vertices(pg))
        assert 1 <= m < pg.n
        assert kappa_matrix_tree(pg) % pg.n ** (m - 1) == 0


def test_factor_bound_controls_residual():
    spec = F.divisor_clique_spec(6)
    coarse = F.kappa_clique_replaced_formula(spec, factor_bound=2)
    assert coarse.value() == 540
    assert coarse.residual == 135 or not coarse.is_fully_factored()
