"""
Firing rule and independence relation of elementary nets.

Firing is a partial map: `fire` returns None when the event is not enabled,
which is a result, not an error. Unknown events raise UnknownEventError.
"""

from typing import FrozenSet, Iterable, Optional, Tuple

from src.models.elementary_net import ElementaryNet, Marking


def independent(net: ElementaryNet, a: str, b: str) -> bool:
    """
    True iff a ≠ b and pre(a)∪post(a) is disjoint from pre(b)∪post(b).

    Raises:
        UnknownEventError: If either event is not declared
    """
    event_a = net.event(a)
    event_b = net.event(b)
    if a == b:
        return False
    return not (event_a.neighborhood & event_b.neighborhood)


def independence_relation(net: ElementaryNet) -> FrozenSet[Tuple[str, str]]:
    """The relation I as a set of ordered pairs; symmetric and irreflexive."""
    names = net.event_names
    return frozenset(
        (a, b) for a in names for b in names if independent(net, a, b)
    )


def fire(net: ElementaryNet, s: Marking, a: str) -> Optional[Marking]:
    """
    s·a = (s∖pre(a))∪post(a), defined when pre(a) ⊆ s and (s∖pre(a))∩post(a) = ∅.

    Args:
        net: Net declaring `a`
        s: Marking of `net`
        a: Event name

    Returns:
        The successor marking, or None when `a` is not enabled at `s`

    Raises:
        UnknownEventError: If `a` is not an event of `net`
    """
    pre, post, post_only = net.firing_masks(a)
    bits = s.bits
    if not all(bits[k] for k in pre):
        return None
    # A place in pre∩post is emptied before it is refilled
    if any(bits[k] for k in post_only):
        return None
    successor = list(bits)
    for k in pre:
        successor[k] = False
    for k in post:
        successor[k] = True
    return Marking(bits=tuple(successor))


def fire_trace(net: ElementaryNet, s: Marking, word: Iterable[str]) -> Optional[Marking]:
    """
    Left fold of `fire` over `word`; the empty word returns `s`.

    Every event of the word is looked up even after the result becomes
    undefined, so an unknown event always raises.
    """
    word = tuple(word)
    for a in word:
        net.event(a)
    current: Optional[Marking] = s
    for a in word:
        current = fire(net, current, a)
        if current is None:
            return None
    return current


def is_transition(net: ElementaryNet, s: Marking, a: str, target: Marking) -> bool:
    """
    Triple characterization of s →^a s':
    pre(a) ⊆ s, post(a) ⊆ s' and s∖pre(a) = s'∖post(a).
    """
    event = net.event(a)
    occupied = s.occupied(net.places)
    occupied_target = target.occupied(net.places)
    return (
        event.pre <= occupied
        and event.post <= occupied_target
        and occupied - event.pre == occupied_target - event.post
    )
