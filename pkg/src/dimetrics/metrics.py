"""Coupling graph and the classic class-level metrics.

CBO counts the distinct project classes a class is coupled to, where coupling
is the symmetric relation induced by field types, parameter types, return
types, object creation, resolvable method invocations, and supertypes.
Couplings to non-project (library) types are excluded, and CBO is a graph
degree rather than a reference count.

RFC is the size of the response set: own methods (constructors included)
plus distinct remote methods reachable by one call, counting ``new T(...)``
as a call of T's constructor.  LCOM is the LCOM1 variant: method pairs
sharing no instance field minus pairs sharing at least one, floored at zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from statistics import fmean
from typing import Iterable, Mapping

from .frontend import ClassModel, ProjectModel, base_type_name

FIELD_TYPE = "field-type"
PARAM_TYPE = "param-type"
RETURN_TYPE = "return-type"
INSTANTIATION = "instantiation"
INVOCATION = "invocation"
SUPERTYPE = "supertype"

USAGE_KINDS = (FIELD_TYPE, PARAM_TYPE, RETURN_TYPE, INSTANTIATION, INVOCATION, SUPERTYPE)


def type_references(model: ClassModel) -> list[tuple[str, str]]:
    """(base type name, usage kind) pairs declared by a class, unfiltered."""
    refs: list[tuple[str, str]] = []
    for fld in model.fields:
        refs.append((base_type_name(fld.type_name), FIELD_TYPE))
    for sup in model.super_types:
        refs.append((sup, SUPERTYPE))
    for method in model.methods:
        for ptype in method.param_types:
            refs.append((base_type_name(ptype), PARAM_TYPE))
        if method.return_type is not None:
            refs.append((base_type_name(method.return_type), RETURN_TYPE))
        for created in method.instantiated_types:
            refs.append((created, INSTANTIATION))
        for receiver_type, _ in sorted(method.invoked_methods):
            refs.append((receiver_type, INVOCATION))
    return refs


@dataclass(frozen=True)
class CouplingGraph:
    """Undirected coupling relation over project classes.

    Edge keys are sorted name pairs; values record which usage kinds
    created the edge (from either side).  Treat as read-only.
    """

    nodes: tuple[str, ...]
    edges: Mapping[tuple[str, str], frozenset[str]]

    def degree(self, name: str) -> int:
        if name not in self.nodes:
            raise KeyError(name)
        return sum(1 for pair in self.edges if name in pair)

    def neighbors(self, name: str) -> tuple[str, ...]:
        if name not in self.nodes:
            raise KeyError(name)
        out = [b if a == name else a for a, b in self.edges if name in (a, b)]
        return tuple(sorted(out))

    def edge_kinds(self, a: str, b: str) -> frozenset[str]:
        return self.edges.get(tuple(sorted((a, b))), frozenset())

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def build_coupling_graph(project: ProjectModel) -> CouplingGraph:
    """Edge {A, B} exists iff either class references the other."""
    names = project.class_names
    edges: dict[tuple[str, str], set[str]] = {}
    for model in project.classes:
        for ref, kind in type_references(model):
            if ref in names and ref != model.name:
                key = (model.name, ref) if model.name < ref else (ref, model.name)
                edges.setdefault(key, set()).add(kind)
    frozen = {key: frozenset(kinds) for key, kinds in edges.items()}
    return CouplingGraph(nodes=tuple(sorted(names)), edges=frozen)


def compute_rfc(model: ClassModel, project: ProjectModel) -> int:
    own = len(model.methods)
    remote: set[tuple[str, str]] = set()
    for method in model.methods:
        for receiver_type, name in method.invoked_methods:
            if receiver_type != model.name and receiver_type in project.class_names:
                remote.add((receiver_type, name))
        for created in method.instantiated_types:
            if created != model.name and created in project.class_names:
                remote.add((created, created))  # constructor call
    return own + len(remote)


def compute_lcom(model: ClassModel) -> int:
    if len(model.methods) < 2:
        return 0
    disjoint = 0
    sharing = 0
    for first, second in combinations(model.methods, 2):
        if first.accessed_fields & second.accessed_fields:
            sharing += 1
        else:
            disjoint += 1
    return max(disjoint - sharing, 0)


@dataclass(frozen=True)
class ClassMetrics:
    class_name: str
    cbo: int
    rfc: int
    lcom: int
    loc: int
    dip: int = 0  # filled by the injection analysis
    dcbo: float = 0.0  # filled by the injection analysis


@dataclass(frozen=True)
class ProjectMetrics:
    project_name: str
    class_metrics: tuple[ClassMetrics, ...]
    mean_cbo: float
    mean_dcbo: float
    mean_lcom: float
    mean_rfc: float
    total_loc: int
    di_proportion: float = 0.0  # filled by the injection analysis


def mean_or_zero(values: Iterable[float]) -> float:
    values = list(values)
    return fmean(values) if values else 0.0


def compute_project_metrics(
    project: ProjectModel, graph: CouplingGraph, project_name: str = "project"
) -> ProjectMetrics:
    """Per-class metrics and their arithmetic means, at full precision.

    DIP and DCBO start at their injection-free values (0 and CBO); the
    injection analysis rewrites them.  Rounding happens only at report time.
    """
    per_class = []
    for model in sorted(project.classes, key=lambda m: m.name):
        cbo = graph.degree(model.name)
        per_class.append(
            ClassMetrics(
                class_name=model.name,
                cbo=cbo,
                rfc=compute_rfc(model, project),
                lcom=compute_lcom(model),
                loc=model.line_count,
                dip=0,
                dcbo=float(cbo),
            )
        )
    files = {model.source.path: model.source.line_count for model in project.classes}
    return ProjectMetrics(
        project_name=project_name,
        class_metrics=tuple(per_class),
        mean_cbo=mean_or_zero(cm.cbo for cm in per_class),
        mean_dcbo=mean_or_zero(cm.dcbo for cm in per_class),
        mean_lcom=mean_or_zero(cm.lcom for cm in per_class),
        mean_rfc=mean_or_zero(cm.rfc for cm in per_class),
        total_loc=sum(files.values()),
    )
