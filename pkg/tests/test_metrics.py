"""Coupling graph and CK metric tests."""
from __future__ import annotations

import random

from hypothesis import given
from hypothesis import strategies as st

from dimetrics.metrics import (
    build_coupling_graph,
    compute_lcom,
    compute_project_metrics,
    compute_rfc,
)

from conftest import make_class, make_method, make_project, random_project


def _dog_pen_project(injected: int = 0, pens: int = 10):
    """Dog plus N pens; injected pens take Dog as a constructor parameter,
    the rest construct their own."""
    classes = [
        make_class(
            "Dog",
            fields=(("name", "String"),),
            methods=(
                make_method("Dog", is_constructor=True, params=("String",), accesses=("name",)),
                make_method("getName", return_type="String", accesses=("name",)),
            ),
        )
    ]
    for i in range(1, pens + 1):
        if i <= injected:
            ctor = make_method(
                f"DogPen{i}", is_constructor=True, params=("Dog",), accesses=("dog",)
            )
        else:
            ctor = make_method(
                f"DogPen{i}", is_constructor=True, instantiates=("Dog",), accesses=("dog",)
            )
        classes.append(
            make_class(
                f"DogPen{i}",
                fields=(("dog", "Dog"),),
                methods=(ctor, make_method("getDog", return_type="Dog", accesses=("dog",))),
                line_count=8 if i <= injected else 10,
            )
        )
    return make_project(*classes)


def test_hub_project_degrees_and_mean():
    project = _dog_pen_project()
    graph = build_coupling_graph(project)
    assert graph.degree("Dog") == 10
    for i in range(1, 11):
        assert graph.degree(f"DogPen{i}") == 1
    metrics = compute_project_metrics(project, graph)
    assert metrics.mean_cbo == (2 * 10) / 11


def test_isolated_class_has_no_edges():
    project = make_project(
        make_class("Lonely", methods=(make_method("noop", return_type=None),))
    )
    graph = build_coupling_graph(project)
    assert graph.edge_count == 0
    assert graph.degree("Lonely") == 0


def test_chain_degrees():
    a = make_class("A", fields=(("b", "B"),))
    b = make_class("B", fields=(("c", "C"),))
    c = make_class("C")
    graph = build_coupling_graph(make_project(a, b, c))
    assert set(graph.edges) == {("A", "B"), ("B", "C")}
    assert (graph.degree("A"), graph.degree("B"), graph.degree("C")) == (1, 2, 1)


def test_library_types_do_not_couple():
    a = make_class(
        "A",
        fields=(("s", "String"),),
        methods=(make_method("go", params=("int", "Ext"), instantiates=("Ext",)),),
    )
    graph = build_coupling_graph(make_project(a))
    assert graph.edge_count == 0


def test_edge_provenance_records_every_kind():
    a = make_class(
        "A",
        fields=(("b", "B"),),
        methods=(
            make_method("go", params=("B",), return_type="B", instantiates=("B",),
                        invokes=(("B", "run"),)),
        ),
        supers=("B",),
    )
    b = make_class("B")
    graph = build_coupling_graph(make_project(a, b))
    assert graph.edge_kinds("A", "B") == frozenset(
        {"field-type", "param-type", "return-type", "instantiation", "invocation", "supertype"}
    )


def test_coupling_is_symmetric_and_counted_once():
    a = make_class("A", fields=(("b", "B"),))
    b = make_class("B", fields=(("a", "A"),))
    graph = build_coupling_graph(make_project(a, b))
    assert graph.edge_count == 1
    assert graph.degree("A") == graph.degree("B") == 1


def test_rfc_counts_own_methods_and_distinct_remote_calls():
    dog = make_class(
        "Dog",
        fields=(("name", "String"),),
        methods=(
            make_method("Dog", is_constructor=True, params=("String",), accesses=("name",)),
            make_method("getName", return_type="String", accesses=("name",)),
        ),
    )
    pen = make_class(
        "DogPen",
        fields=(("dog", "Dog"),),
        methods=(
            make_method("DogPen", is_constructor=True, instantiates=("Dog",), accesses=("dog",)),
            make_method("getDog", return_type="Dog", accesses=("dog",)),
        ),
    )
    project = make_project(dog, pen)
    assert compute_rfc(pen, project) == 3  # 2 own + Dog constructor
    assert compute_rfc(dog, project) == 2  # no remote calls


def test_rfc_project_mean_for_hub_project():
    project = _dog_pen_project(injected=0)
    graph = build_coupling_graph(project)
    metrics = compute_project_metrics(project, graph)
    assert metrics.mean_rfc == (2 + 10 * 3) / 11


def test_rfc_of_methodless_class_is_zero():
    project = make_project(make_class("Empty"))
    assert compute_rfc(project.classes[0], project) == 0


def test_rfc_deduplicates_repeated_remote_calls():
    target = make_class("Target", methods=(make_method("hit"),))
    caller = make_class(
        "Caller",
        methods=(
            make_method("a", invokes=(("Target", "hit"),)),
            make_method("b", invokes=(("Target", "hit"),)),
        ),
    )
    project = make_project(target, caller)
    assert compute_rfc(caller, project) == 3  # 2 own + 1 distinct remote


def test_rfc_ignores_own_class_invocations_and_self_construction():
    c = make_class(
        "Self",
        methods=(
            make_method("a", invokes=(("Self", "b"),), instantiates=("Self",)),
            make_method("b"),
        ),
    )
    project = make_project(c)
    assert compute_rfc(c, project) == 2


def test_lcom_shared_field_pair_is_zero():
    pen = make_class(
        "Pen",
        fields=(("dog", "Dog"),),
        methods=(
            make_method("Pen", is_constructor=True, accesses=("dog",)),
            make_method("getDog", accesses=("dog",)),
        ),
    )
    assert compute_lcom(pen) == 0


def test_lcom_single_method_is_zero():
    assert compute_lcom(make_class("C", methods=(make_method("only"),))) == 0


def test_lcom_three_disjoint_methods():
    c = make_class(
        "C",
        fields=(("a", "int"), ("b", "int"), ("c", "int")),
        methods=(
            make_method("ma", accesses=("a",)),
            make_method("mb", accesses=("b",)),
            make_method("mc", accesses=("c",)),
        ),
    )
    # all 3 pairs disjoint: P=3, Q=0
    assert compute_lcom(c) == 3


def test_lcom_floors_at_zero():
    c = make_class(
        "C",
        fields=(("a", "int"),),
        methods=(
            make_method("m1", accesses=("a",)),
            make_method("m2", accesses=("a",)),
            make_method("m3", accesses=("a",)),
        ),
    )
    assert compute_lcom(c) == 0  # P=0, Q=3


def test_two_class_mutual_project_mean():
    a = make_class("A", fields=(("b", "B"),), methods=(make_method("ma"),))
    b = make_class("B", fields=(("a", "A"),), methods=(make_method("mb"),))
    project = make_project(a, b)
    metrics = compute_project_metrics(project, build_coupling_graph(project))
    assert metrics.mean_cbo == 1.0


def test_empty_project_means_are_zero():
    project = make_project()
    metrics = compute_project_metrics(project, build_coupling_graph(project))
    assert metrics.mean_cbo == metrics.mean_rfc == metrics.mean_lcom == 0.0
    assert metrics.total_loc == 0


def test_metrics_are_order_independent():
    a = make_class("A", fields=(("b", "B"),), methods=(make_method("ma"),))
    b = make_class("B", methods=(make_method("mb", invokes=(("A", "go"),)),))
    forward = make_project(a, b)
    backward = make_project(b, a)
    mf = compute_project_metrics(forward, build_coupling_graph(forward))
    mb = compute_project_metrics(backward, build_coupling_graph(backward))
    assert mf.class_metrics == mb.class_metrics


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_degree_sum_equals_twice_edge_count(seed):
    project = random_project(random.Random(seed))
    graph = build_coupling_graph(project)
    assert sum(graph.degree(c.name) for c in project.classes) == 2 * graph.edge_count


def test_cbo_is_invariant_under_injection_style():
    plain = _dog_pen_project(injected=0)
    injected = _dog_pen_project(injected=10)
    g_plain = build_coupling_graph(plain)
    g_injected = build_coupling_graph(injected)
    assert set(g_plain.edges) == set(g_injected.edges)
