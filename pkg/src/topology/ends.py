"""Finite-radius end structure of Cayley graphs.

The Cayley graph here has edges ``g -- s g`` (left multiplication), which matches
the path convention ``to = s_k ... s_1 from``. Inversion maps it onto the
right-multiplication graph and preserves every ball, so component counts agree.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from src.constants import DEFAULT_END_SCHEDULE, STABILIZATION_WINDOW
from src.exceptions import NotConnectedWithinRError, ParameterOutOfRangeError
from src.groups import Elem, GroupContext, Letter, Word


class EndVerdict(str, Enum):
    ONE_END = "OneEnd"
    TWO_ENDS = "TwoEnds"
    INFINITELY_MANY = "InfinitelyMany"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Component:
    """A connected component of ``B(R) \\ B(ℓ)``."""

    elements: tuple[Elem, ...]
    touches_sphere: bool

    @property
    def least(self) -> Elem:
        return self.elements[0]


@dataclass(frozen=True)
class EndEntry:
    inner: int
    outer: int
    components: tuple[Component, ...]

    @property
    def count(self) -> int:
        """Components that meet the outer sphere."""
        return sum(1 for component in self.components if component.touches_sphere)


@dataclass(frozen=True)
class EndReport:
    entries: tuple[EndEntry, ...]
    verdict: EndVerdict

    @property
    def counts(self) -> list[int]:
        return [entry.count for entry in self.entries]


def _annulus_graph(group: GroupContext, inner: int, outer: int) -> nx.Graph:
    ball = group.ball(outer)
    graph = nx.Graph()
    for g, length in zip(ball.elements, ball.lengths):
        if length > inner:
            graph.add_node(g, length=length)
    for g in list(graph.nodes):
        for letter in group.letters:
            h = group.multiply(letter.value, g)
            if h in graph:
                graph.add_edge(g, h)
    return graph


def complement_components(
    group: GroupContext, inner: int, outer: int
) -> list[Component]:
    """
    Connected components of ``B(outer) \\ B(inner)``, ordered by least element.

    Raises:
        ParameterOutOfRangeError: Unless ``0 <= inner < outer``.
        BallTooLargeError: If ``B(outer)`` exceeds the element cap.
    """
    if not 0 <= inner < outer:
        raise ParameterOutOfRangeError("l", inner, 0, outer - 1)
    graph = _annulus_graph(group, inner, outer)
    components = []
    for nodes in nx.connected_components(graph):
        ordered = tuple(sorted(nodes, key=group.sort_key))
        touches = any(graph.nodes[g]["length"] == outer for g in ordered)
        components.append(Component(ordered, touches))
    components.sort(key=lambda component: group.sort_key(component.least))
    return components


def _verdict(counts: list[int]) -> EndVerdict:
    if len(counts) < STABILIZATION_WINDOW:
        return EndVerdict.INCONCLUSIVE
    tail = counts[-STABILIZATION_WINDOW:]
    if all(count == tail[0] for count in tail):
        if tail[0] == 1:
            return EndVerdict.ONE_END
        if tail[0] == 2:
            return EndVerdict.TWO_ENDS
        # a stable count of 3 or more cannot be the end count
        return EndVerdict.INFINITELY_MANY if tail[0] >= 3 else EndVerdict.INCONCLUSIVE
    if all(a < b for a, b in zip(tail, tail[1:])):
        return EndVerdict.INFINITELY_MANY
    return EndVerdict.INCONCLUSIVE


def _check_schedule(schedule: list[tuple[int, int]]) -> None:
    if not schedule:
        raise ParameterOutOfRangeError("schedule length", 0, 1, STABILIZATION_WINDOW)
    for (inner, outer), (next_inner, next_outer) in zip(schedule, schedule[1:]):
        if next_inner <= inner or next_outer < outer:
            raise ParameterOutOfRangeError("schedule l", next_inner, inner + 1, outer)


def estimate_ends(
    group: GroupContext, schedule: list[tuple[int, int]] | None = None
) -> EndReport:
    """
    Count sphere-touching annulus components along ``schedule``.

    The verdict reads the last three entries: ``1,1,1`` is one end, ``2,2,2`` two
    ends, strictly increasing (or stable at three or more) infinitely many.
    """
    schedule = list(schedule or DEFAULT_END_SCHEDULE)
    _check_schedule(schedule)
    entries = tuple(
        EndEntry(inner, outer, tuple(complement_components(group, inner, outer)))
        for inner, outer in schedule
    )
    return EndReport(entries, _verdict([entry.count for entry in entries]))


def path_outside_ball(
    group: GroupContext, source: Elem, target: Elem, inner: int, outer: int
) -> Word:
    """
    Shortest word ``s_1 .. s_k`` with ``target = s_k ... s_1 source`` whose every
    point stays in ``B(outer) \\ B(inner)``; ties break by generator order.

    Raises:
        ParameterOutOfRangeError: If an endpoint is not in the annulus.
        NotConnectedWithinRError: If no such path exists.
    """
    for point in (source, target):
        length = group.word_length(point)
        if not inner < length <= outer:
            raise ParameterOutOfRangeError("endpoint length", length, inner + 1, outer)

    parent = _annulus_parents(group, source, target, inner, outer)
    if target not in parent:
        raise _not_connected(group, source, target, inner, outer)

    word: list[Letter] = []
    point = target
    while (step := parent[point]) is not None:
        point, letter = step
        word.append(letter)
    return tuple(reversed(word))


def _annulus_parents(
    group: GroupContext, source: Elem, target: Elem, inner: int, outer: int
) -> dict[Elem, tuple[Elem, Letter] | None]:
    """Breadth-first search tree from ``source`` inside the annulus."""
    parent: dict[Elem, tuple[Elem, Letter] | None] = {source: None}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        if current == target:
            break
        for letter in group.letters:
            nxt = group.multiply(letter.value, current)
            if nxt not in parent and inner < group.word_length(nxt) <= outer:
                parent[nxt] = (current, letter)
                queue.append(nxt)
    return parent


def _not_connected(
    group: GroupContext, source: Elem, target: Elem, inner: int, outer: int
) -> NotConnectedWithinRError:
    touches = {}
    for component in complement_components(group, inner, outer):
        for point in (source, target):
            if point in component.elements:
                touches[point] = component.touches_sphere
    return NotConnectedWithinRError(
        group.format_element(source),
        group.format_element(target),
        inner,
        outer,
        source_unbounded=touches.get(source, False),
        target_unbounded=touches.get(target, False),
    )


def replay_path(group: GroupContext, source: Elem, word: Word) -> list[Elem]:
    """Points ``source, s_1 source, s_2 s_1 source, ...`` visited by ``word``."""
    points = [source]
    for letter in word:
        points.append(group.multiply(letter.value, points[-1]))
    return points
