"""Center certification for graph-defined Artin groups.

The analysis decomposes the graph into irreducible join factors and resolves
each one with a fixed rule chain:

  1. spherical factor: infinite cyclic center, explicit generator;
  2. two-dimensional factor (no spherical triple): trivial center;
  3. Euclidean factor (positive semidefinite Gram form of corank one):
     trivial center;
  4. FC-type factor (every clique spherical): trivial center;
  5. non-clique factor with no cone points: trivial center, because the
     center lies in the subgroup generated by the cone points;
  6. non-clique factor with cone points: recurse on the cone-point subgraph;
     if that analysis is complete the factor's center is trivial, otherwise
     the result records the containment of the center in the cone subgroup;
  7. non-spherical clique outside the known classes: inconclusive.

An inconclusive factor never claims the conjecture fails; it only means this
toolkit does not resolve the instance.  Every resolved factor carries a
replayable record of the predicates that justified it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .coxeter import coxeter_number, is_affine, is_minus_identity, is_spherical, longest_element
from .graph import DefiningGraph
from .words import ArtinWord

SPHERICAL = "SPHERICAL"
ESTABLISHED_TRIVIAL = "ESTABLISHED_TRIVIAL"
UNKNOWN = "UNKNOWN"

NOT_CONE = "NOT_CONE"
CONE_RECURSION = "CONE_RECURSION"
TWO_DIMENSIONAL = "TWO_DIMENSIONAL"
EUCLIDEAN = "EUCLIDEAN"
FC_TYPE = "FC_TYPE"

MAX_VERTICES = 16

_RULE_STATEMENTS = {
    SPHERICAL: (
        "the factor has a finite Coxeter quotient, so its center is infinite "
        "cyclic, generated by a power of the product of its generators"
    ),
    TWO_DIMENSIONAL: (
        "no three generators span a spherical subgroup, so the factor is "
        "two-dimensional; irreducible two-dimensional Artin groups of "
        "infinite type have trivial center"
    ),
    EUCLIDEAN: (
        "the Gram form is positive semidefinite of corank one, so the factor "
        "is Euclidean; irreducible Euclidean Artin groups have trivial center"
    ),
    FC_TYPE: (
        "every clique spans a spherical subgroup, so the factor is FC-type; "
        "irreducible FC-type Artin groups of infinite type have trivial center"
    ),
    NOT_CONE: (
        "the factor is not a clique and has no cone points; the center lies "
        "in the subgroup generated by the cone points, which is trivial"
    ),
    CONE_RECURSION: (
        "the center lies in the subgroup generated by the cone points, whose "
        "analysis is complete; an irreducible non-clique factor is of "
        "infinite type, so its center is trivial"
    ),
    "UNKNOWN_CONE": (
        "the center lies in the subgroup generated by the cone points, but "
        "the analysis of that subgroup is incomplete"
    ),
    "UNKNOWN_CLIQUE": (
        "a non-spherical clique outside the supported classes; every vertex "
        "is a cone point, so the cone containment is vacuous"
    ),
}


@dataclass(frozen=True)
class ReasoningStep:
    factor: tuple[str, ...]
    rule: str
    statement: str
    premises: tuple[tuple[str, bool], ...]

    def to_dict(self) -> dict:
        return {
            "factor": list(self.factor),
            "rule": self.rule,
            "statement": self.statement,
            "premises": dict(self.premises),
        }


@dataclass(frozen=True)
class FactorAnalysis:
    graph: DefiningGraph
    kind: str                              # SPHERICAL / ESTABLISHED_TRIVIAL / UNKNOWN
    reason: str | None                     # reason tag for trivial factors
    cone_points: tuple[str, ...] | None    # containment subset for rules 5-7
    child: "AnalysisReport | None"         # analysis of the cone subgraph
    generator: ArtinWord | None            # center generator for spherical factors

    @property
    def resolved(self) -> bool:
        return self.kind != UNKNOWN

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.graph.vertices),
            "kind": self.kind,
            "reason": self.reason,
            "cone_points": None if self.cone_points is None else list(self.cone_points),
            "generator": None if self.generator is None else self.generator.to_text(),
            "child": None if self.child is None else self.child.to_dict(),
        }


@dataclass(frozen=True)
class AnalysisReport:
    graph: DefiningGraph
    factors: tuple[FactorAnalysis, ...]
    established: bool
    center_rank: int
    center_generators: tuple[ArtinWord, ...]
    reasoning: tuple[ReasoningStep, ...]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.graph.vertices),
            "established": self.established,
            "center_rank": self.center_rank,
            "center_generators": [w.to_text() for w in self.center_generators],
            "factors": [f.to_dict() for f in self.factors],
            "reasoning": [r.to_dict() for r in self.reasoning],
        }

    def to_text(self, indent: str = "") -> str:
        lines = []
        verts = " ".join(self.graph.vertices) or "(empty)"
        lines.append(f"{indent}graph: {verts}")
        lines.append(f"{indent}irreducible factors: {len(self.factors)}")
        for i, f in enumerate(self.factors, start=1):
            head = f"{indent}factor {i} {{{', '.join(f.graph.vertices)}}}: {f.kind}"
            if f.reason:
                head += f" ({f.reason})"
            lines.append(head)
            if f.generator is not None:
                lines.append(f"{indent}  center generator: {f.generator.to_text()}")
            if f.cone_points is not None:
                lines.append(
                    f"{indent}  cone points: {{{', '.join(f.cone_points)}}}"
                )
            if f.child is not None:
                lines.append(f"{indent}  cone subgraph analysis:")
                lines.append(f.child.to_text(indent + "    "))
        for step in self.reasoning:
            lines.append(
                f"{indent}rule[{step.rule}] on {{{', '.join(step.factor)}}}: {step.statement}"
            )
        status = "ESTABLISHED" if self.established else "NOT ESTABLISHED"
        lines.append(
            f"{indent}{status}: center rank "
            f"{self.center_rank if self.established else 'undetermined, at least ' + str(self.center_rank)}"
        )
        if self.center_generators:
            gens = "; ".join(w.to_text() for w in self.center_generators)
            lines.append(f"{indent}center generators: {gens}")
        return "\n".join(lines)


def is_two_dimensional(g: DefiningGraph) -> bool:
    """True iff no three vertices induce a spherical subgraph."""
    for triple in combinations(g.vertices, 3):
        if is_spherical(g.induced(triple)):
            return False
    return True


def is_fc_type(g: DefiningGraph) -> bool:
    """True iff every clique induces a spherical subgraph.

    Principal submatrices of a positive definite form are positive definite,
    so it is enough to check maximal cliques.
    """
    if len(g.vertices) > MAX_VERTICES:
        raise ValueError(f"FC test guard: at most {MAX_VERTICES} vertices")
    aux = nx.Graph()
    aux.add_nodes_from(g.vertices)
    aux.add_edges_from((g.vertices[i], g.vertices[j]) for i, j, _ in g.edges)
    for clique in nx.find_cliques(aux):
        if not is_spherical(g.induced(clique)):
            return False
    return True


def spherical_center_generator(g: DefiningGraph) -> ArtinWord:
    """Central word of a spherical graph; generates the center when the graph
    is irreducible.

    With c the declaration-order product of the generators and h its order,
    the word is c^(h/2) when the longest element acts as minus the identity
    and c^h otherwise.  Both the order and the branch are computed, never
    looked up.
    """
    if not is_spherical(g):
        raise ValueError("center generator requires a spherical graph")
    h = coxeter_number(g)
    power = h // 2 if is_minus_identity(longest_element(g)) else h
    cox_word = ArtinWord(tuple((v, 1) for v in g.vertices))
    return cox_word ** power


_BASE_CLASS_RULES: tuple[tuple[str, object], ...] = (
    (TWO_DIMENSIONAL, is_two_dimensional),
    (EUCLIDEAN, is_affine),
    (FC_TYPE, is_fc_type),
)


def _resolve_factor(
    factor: DefiningGraph,
    max_vertices: int,
    base_rules: tuple[tuple[str, object], ...],
) -> tuple[FactorAnalysis, list[ReasoningStep]]:
    verts = factor.vertices
    premises: list[tuple[str, bool]] = []

    spherical = is_spherical(factor)
    premises.append(("is_spherical", spherical))
    if spherical:
        gen = spherical_center_generator(factor)
        step = ReasoningStep(verts, SPHERICAL, _RULE_STATEMENTS[SPHERICAL], tuple(premises))
        return (
            FactorAnalysis(factor, SPHERICAL, None, None, None, gen),
            [step],
        )

    for reason, predicate in base_rules:
        holds = bool(predicate(factor))
        premises.append((predicate.__name__, holds))
        if holds:
            step = ReasoningStep(verts, reason, _RULE_STATEMENTS[reason], tuple(premises))
            return (
                FactorAnalysis(factor, ESTABLISHED_TRIVIAL, reason, None, None, None),
                [step],
            )

    clique = factor.is_clique()
    premises.append(("is_clique", clique))
    cone = factor.cone_points()
    premises.append(("has_cone_points", bool(cone)))

    if not clique and not cone:
        step = ReasoningStep(verts, NOT_CONE, _RULE_STATEMENTS[NOT_CONE], tuple(premises))
        return (
            FactorAnalysis(factor, ESTABLISHED_TRIVIAL, NOT_CONE, cone, None, None),
            [step],
        )

    if not clique:
        child = establish(factor.induced(cone), max_vertices=max_vertices, _base_rules=base_rules)
        premises.append(("cone_subgraph_established", child.established))
        if child.established:
            step = ReasoningStep(
                verts, CONE_RECURSION, _RULE_STATEMENTS[CONE_RECURSION], tuple(premises)
            )
            return (
                FactorAnalysis(factor, ESTABLISHED_TRIVIAL, CONE_RECURSION, cone, child, None),
                [step],
            )
        step = ReasoningStep(
            verts, "UNKNOWN_CONE", _RULE_STATEMENTS["UNKNOWN_CONE"], tuple(premises)
        )
        return (FactorAnalysis(factor, UNKNOWN, None, cone, child, None), [step])

    step = ReasoningStep(
        verts, "UNKNOWN_CLIQUE", _RULE_STATEMENTS["UNKNOWN_CLIQUE"], tuple(premises)
    )
    return (FactorAnalysis(factor, UNKNOWN, None, cone, None, None), [step])


def establish(
    g: DefiningGraph,
    max_vertices: int = MAX_VERTICES,
    _base_rules: tuple[tuple[str, object], ...] = _BASE_CLASS_RULES,
) -> AnalysisReport:
    """Analyze a graph and certify its center where the rule chain applies.

    The report is established when every irreducible factor is resolved; the
    center rank is then the number of spherical factors, with one explicit
    generator word per spherical factor.
    """
    if len(g.vertices) > max_vertices:
        raise ValueError(
            f"graph has {len(g.vertices)} vertices; guard is {max_vertices}"
        )
    factors: list[FactorAnalysis] = []
    reasoning: list[ReasoningStep] = []
    for factor in g.join_factors():
        analysis, steps = _resolve_factor(factor, max_vertices, _base_rules)
        factors.append(analysis)
        reasoning.extend(steps)
    established = all(f.resolved for f in factors)
    generators = tuple(f.generator for f in factors if f.generator is not None)
    return AnalysisReport(
        graph=g,
        factors=tuple(factors),
        established=established,
        center_rank=len(generators),
        center_generators=generators,
        reasoning=tuple(reasoning),
    )
