"""Letter-by-letter retraction of Artin words onto a standard subgroup.

Processing a word v_1^(e_1) ... v_p^(e_p) over the whole graph, the map
tracks the image u_i of each positive prefix in the Coxeter group and its
coset decomposition u_i = (subgroup part) * (reduced part) relative to the
target subset X.  Each letter contributes the reflection obtained by
conjugating its generator by the current reduced part (the previous one for a
positive letter, the new one for a negative letter).  Letters whose
reflection is a simple reflection of X survive, with their original sign;
all other letters vanish.

The reduced part is maintained incrementally: right-multiplying a reduced
coset representative by a generator either stays reduced or strips exactly
one descent from X, so each letter costs a bounded amount of matrix work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .coxeter import (
    CoxeterElement,
    _mat_mul,
    coset_decompose,
    field_of,
    identity,
    simple_reflection,
)
from .graph import DefiningGraph
from .words import ArtinWord


def _conjugated_reflection(
    conjugator: CoxeterElement, refl: CoxeterElement
) -> CoxeterElement:
    # conjugates of involutions are involutions, so one matrix serves as both
    ctx = field_of(conjugator.graph)
    mat = _mat_mul(_mat_mul(conjugator.mat, refl.mat, ctx), conjugator.inv, ctx)
    return CoxeterElement(conjugator.graph, mat, mat)


@dataclass(frozen=True)
class RetractionStep:
    """Audit record for one input letter."""

    position: int                       # 0-based letter index
    vertex: str
    exponent: int
    prefix_image: CoxeterElement        # image of the prefix through this letter
    subgroup_part: CoxeterElement       # part of the prefix image inside W_X
    reduced_part: CoxeterElement        # X-reduced part of the prefix image
    reflection: CoxeterElement          # conjugated generator tested against X
    emitted: tuple[str, int] | None     # surviving output letter, if any


@dataclass(frozen=True)
class RetractionTrace:
    graph: DefiningGraph
    subset: tuple[str, ...]
    word: ArtinWord
    steps: tuple[RetractionStep, ...]
    output: ArtinWord

    def to_text(self) -> str:
        header = f"retraction onto {{{', '.join(self.subset)}}}"
        lines = [header, "-" * len(header)]
        lines.append(f"{'i':>3}  {'letter':<8} {'subgroup part':<20} {'reduced part':<20} {'reflection':<24} emitted")
        for s in self.steps:
            letter = s.vertex if s.exponent == 1 else f"{s.vertex}^-1"
            vp = " ".join(s.subgroup_part.reduced_word()) or "1"
            wp = " ".join(s.reduced_part.reduced_word()) or "1"
            refl = " ".join(s.reflection.reduced_word()) or "1"
            emitted = "-" if s.emitted is None else (
                s.emitted[0] if s.emitted[1] == 1 else f"{s.emitted[0]}^-1"
            )
            lines.append(f"{s.position + 1:>3}  {letter:<8} {vp:<20} {wp:<20} {refl:<24} {emitted}")
        lines.append(f"output: {self.output.to_text() or '1'}")
        return "\n".join(lines)


def _steps(
    g: DefiningGraph, subset: tuple[str, ...], word: ArtinWord
) -> Iterator[RetractionStep]:
    prefix = identity(g)
    v_part = identity(g)
    w_part = identity(g)
    for pos, (vertex, exponent) in enumerate(word.letters):
        refl_gen = simple_reflection(g, vertex)
        prefix = prefix * refl_gen
        prev_w = w_part
        dec = coset_decompose(prev_w * refl_gen, subset)
        v_part = v_part * dec.subgroup_part
        w_part = dec.reduced_part
        conjugator = prev_w if exponent == 1 else w_part
        reflection = _conjugated_reflection(conjugator, refl_gen)
        witness = reflection.match_simple_reflection(subset)
        emitted = (witness, exponent) if witness is not None else None
        yield RetractionStep(
            position=pos,
            vertex=vertex,
            exponent=exponent,
            prefix_image=prefix,
            subgroup_part=v_part,
            reduced_part=w_part,
            reflection=reflection,
            emitted=emitted,
        )


def retract(g: DefiningGraph, subset: Iterable[str], word: ArtinWord) -> ArtinWord:
    """Retract a word onto the subgroup generated by the subset.

    Words already over the subset pass through letter for letter; positivity
    and exponent signs of surviving letters are preserved.
    """
    x_set = g.subset(subset)
    for v, _ in word.letters:
        g.index(v)
    letters = tuple(
        step.emitted for step in _steps(g, x_set, word) if step.emitted is not None
    )
    return ArtinWord(letters)


def retract_trace(
    g: DefiningGraph, subset: Iterable[str], word: ArtinWord
) -> RetractionTrace:
    """Full per-letter audit whose emitted letters concatenate to the retraction."""
    x_set = g.subset(subset)
    for v, _ in word.letters:
        g.index(v)
    steps = tuple(_steps(g, x_set, word))
    output = ArtinWord(tuple(s.emitted for s in steps if s.emitted is not None))
    return RetractionTrace(graph=g, subset=x_set, word=word, steps=steps, output=output)
