"""
ElementaryNet model - Places, events with pre/post sets, initial marking.

Uses Pydantic v2 for validation. Nets are frozen: every operation on a net
returns a new value.
"""

from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from pydantic import BaseModel, PrivateAttr, field_validator, model_validator

from src.utils.errors import UnknownEventError


class Marking(BaseModel):
    """
    A state of an elementary net: the set of occupied places.

    Encoded as a bit vector indexed by the net's place order, so equality
    is set equality for markings of the same net.
    """
    bits: Tuple[bool, ...]

    model_config = {"frozen": True}

    @classmethod
    def from_places(cls, places: Sequence[str], occupied: Iterable[str]) -> 'Marking':
        """
        Encode a set of occupied place names.

        Raises:
            ValueError: If an occupied place is not in `places`
        """
        occupied_set = set(occupied)
        unknown = occupied_set - set(places)
        if unknown:
            raise ValueError(f"Marking names undeclared places: {sorted(unknown)}")
        return cls(bits=tuple(p in occupied_set for p in places))

    @classmethod
    def from_string(cls, text: str) -> 'Marking':
        """Decode the ε_1⋯ε_k rendering, e.g. "101"."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"Marking string must contain only 0/1: {text!r}")
        return cls(bits=tuple(ch == "1" for ch in text))

    @classmethod
    def from_index(cls, index: int, width: int) -> 'Marking':
        """Inverse of `index` for a net with `width` places."""
        if not 0 <= index < 2 ** width:
            raise ValueError(f"Index {index} out of range for {width} places")
        return cls(bits=tuple(bool((index >> (width - 1 - k)) & 1) for k in range(width)))

    def occupied(self, places: Sequence[str]) -> FrozenSet[str]:
        """Decode back into a set of place names."""
        return frozenset(p for p, bit in zip(places, self.bits) if bit)

    def to_string(self) -> str:
        """Render as ε_1⋯ε_k, most significant place first."""
        return "".join("1" if bit else "0" for bit in self.bits)

    @property
    def index(self) -> int:
        """Binary value of the state string, most significant bit first."""
        value = 0
        for bit in self.bits:
            value = (value << 1) | int(bit)
        return value

    @property
    def width(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.to_string()


class EventDef(BaseModel):
    """An event with its pre-set and post-set of places."""
    name: str
    pre: FrozenSet[str] = frozenset()
    post: FrozenSet[str] = frozenset()

    model_config = {"frozen": True, "str_strip_whitespace": True}

    @property
    def neighborhood(self) -> FrozenSet[str]:
        """pre(a) ∪ post(a)"""
        return self.pre | self.post


class ElementaryNet(BaseModel):
    """
    Elementary Petri net (P, E, pre, post, s_0).

    Event order is fixed at construction and is the linear order on E used
    when building semicubical sets.
    """
    places: Tuple[str, ...]
    events: Tuple[EventDef, ...]
    initial: Marking

    model_config = {"frozen": True}

    _place_index: Dict[str, int] = PrivateAttr(default_factory=dict)
    _event_index: Dict[str, int] = PrivateAttr(default_factory=dict)
    _pre_bits: Dict[str, Tuple[int, ...]] = PrivateAttr(default_factory=dict)
    _post_only_bits: Dict[str, Tuple[int, ...]] = PrivateAttr(default_factory=dict)
    _post_bits: Dict[str, Tuple[int, ...]] = PrivateAttr(default_factory=dict)

    @model_validator(mode='before')
    @classmethod
    def encode_initial(cls, data):
        """Accept `initial` as an iterable of place names."""
        if isinstance(data, dict):
            initial = data.get('initial')
            if initial is not None and not isinstance(initial, (Marking, dict)):
                data = dict(data)
                data['initial'] = Marking.from_places(tuple(data.get('places', ())), initial)
        return data

    @field_validator('places', mode='after')
    @classmethod
    def unique_places(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        """Place identifiers are unique"""
        duplicates = sorted({p for p in v if v.count(p) > 1})
        if duplicates:
            raise ValueError(f"Duplicate place identifiers: {duplicates}")
        return v

    @model_validator(mode='after')
    def check_references(self) -> 'ElementaryNet':
        """Events are unique and only name declared places."""
        names = [e.name for e in self.events]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"Duplicate event identifiers: {duplicates}")

        declared = set(self.places)
        for event in self.events:
            undeclared = event.neighborhood - declared
            if undeclared:
                raise ValueError(
                    f"Event {event.name!r} references undeclared places: {sorted(undeclared)}"
                )

        if self.initial.width != len(self.places):
            raise ValueError(
                f"Initial marking has {self.initial.width} bits for {len(self.places)} places"
            )
        return self

    def model_post_init(self, __context) -> None:
        """
        Precompute index tables used by the firing rule.

        Runs before the `after` validators, so undeclared places are skipped
        here and reported by check_references.
        """
        self._place_index = {p: k for k, p in enumerate(self.places)}
        self._event_index = {e.name: k for k, e in enumerate(self.events)}

        def bits(names) -> Tuple[int, ...]:
            return tuple(sorted(self._place_index[p] for p in names if p in self._place_index))

        for event in self.events:
            self._pre_bits[event.name] = bits(event.pre)
            self._post_bits[event.name] = bits(event.post)
            self._post_only_bits[event.name] = bits(event.post - event.pre)

    @property
    def event_names(self) -> Tuple[str, ...]:
        return tuple(e.name for e in self.events)

    def event(self, name: str) -> EventDef:
        """
        Look up an event by name.

        Raises:
            UnknownEventError: If the event is not declared
        """
        if name not in self._event_index:
            raise UnknownEventError(name)
        return self.events[self._event_index[name]]

    def event_position(self, name: str) -> int:
        """Position of the event in the linear order on E."""
        if name not in self._event_index:
            raise UnknownEventError(name)
        return self._event_index[name]

    def has_event(self, name: str) -> bool:
        return name in self._event_index

    def firing_masks(self, name: str) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
        """(pre, post, post∖pre) as place positions, for the firing rule."""
        if name not in self._event_index:
            raise UnknownEventError(name)
        return self._pre_bits[name], self._post_bits[name], self._post_only_bits[name]

    def marking(self, occupied: Iterable[str]) -> Marking:
        """Encode a set of occupied places of this net."""
        return Marking.from_places(self.places, occupied)

    def all_markings(self) -> List[Marking]:
        """Every marking of {0,1}^P, ordered by state index."""
        width = len(self.places)
        return [Marking.from_index(k, width) for k in range(2 ** width)]

    def with_event_order(self, order: Sequence[str]) -> 'ElementaryNet':
        """
        Same net with events re-declared in `order`.

        Raises:
            ValueError: If `order` is not a permutation of the event names
        """
        if sorted(order) != sorted(self.event_names):
            raise ValueError("Event order must be a permutation of the net's events")
        return ElementaryNet(
            places=self.places,
            events=tuple(self.event(name) for name in order),
            initial=self.initial,
        )

    def without_events(self, names: Iterable[str]) -> 'ElementaryNet':
        """
        Same net with the named events deleted.

        Raises:
            UnknownEventError: If a name is not an event of the net
        """
        drop = set(names)
        for name in drop:
            self.event(name)
        return ElementaryNet(
            places=self.places,
            events=tuple(e for e in self.events if e.name not in drop),
            initial=self.initial,
        )
