"""Argumentation framework data model and its definitional primitives."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Iterable
from typing import Iterator
from typing import Sequence

logger = logging.getLogger(__name__)


class FrameworkError(ValueError):
    """Base exception for malformed frameworks and argument sets."""

    pass


class DuplicateLabelError(FrameworkError):
    """Raised when two arguments share a label."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"Duplicate argument label '{label}'")


class UnknownLabelError(FrameworkError):
    """Raised when an attack or query names an undeclared argument."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"Unknown argument label '{label}'")


class SizeLimitExceededError(FrameworkError):
    """Raised when a framework is too large for an exponential enumerator."""

    def __init__(
        self,
        arg_count: int,
        limit: int,
        semantics: str | None = None,
    ):
        self.arg_count = arg_count
        self.limit = limit
        self.semantics = semantics
        what = f'{semantics} semantics' if semantics else 'this operation'
        super().__init__(
            f'Framework has {arg_count} arguments but {what} is limited to '
            f'{limit}: every subset of the arguments has to be examined, '
            f'so the work grows as 2^n and larger inputs would not finish '
            f'in reasonable time. Raise the limit explicitly to continue.',
        )


def _bit_indices(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def union_of_masks(masks: Sequence[int], bits: int) -> int:
    """OR together ``masks[i]`` for every index ``i`` set in ``bits``."""
    result = 0
    for index in _bit_indices(bits):
        result |= masks[index]
    return result


@dataclass(frozen=True)
class ArgSet:
    """
    A subset of a framework's arguments stored as a bit-vector.

    Bit ``i`` is set iff argument ``i`` is a member. ``width`` is the
    argument count of the framework the set is indexed against.
    """

    bits: int
    width: int

    def __post_init__(self):
        if self.width < 0 or self.bits < 0 or self.bits >> self.width:
            raise FrameworkError(
                f'Bits {self.bits:#x} do not fit a framework of '
                f'{self.width} arguments',
            )

    @classmethod
    def from_indices(cls, indices: Iterable[int], width: int) -> ArgSet:
        bits = 0
        for index in indices:
            if not 0 <= index < width:
                raise FrameworkError(
                    f'Argument index {index} outside [0, {width})',
                )
            bits |= 1 << index
        return cls(bits, width)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return _bit_indices(self.bits)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and index >= 0 and bool(
            self.bits >> index & 1,
        )

    def _same_width(self, other: ArgSet) -> None:
        if self.width != other.width:
            raise FrameworkError(
                f'Cannot combine argument sets of width {self.width} '
                f'and {other.width}',
            )

    def __or__(self, other: ArgSet) -> ArgSet:
        self._same_width(other)
        return ArgSet(self.bits | other.bits, self.width)

    def __and__(self, other: ArgSet) -> ArgSet:
        self._same_width(other)
        return ArgSet(self.bits & other.bits, self.width)

    def __sub__(self, other: ArgSet) -> ArgSet:
        self._same_width(other)
        return ArgSet(self.bits & ~other.bits, self.width)

    def issubset(self, other: ArgSet) -> bool:
        self._same_width(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: ArgSet) -> bool:
        self._same_width(other)
        return self.bits & other.bits == 0

    @property
    def sort_key(self) -> tuple[int, int]:
        """Canonical order: cardinality first, then numeric bit value."""
        return self.bits.bit_count(), self.bits

    def labels(self, framework: Framework) -> tuple[str, ...]:
        """Labels of the members in declaration order."""
        framework.check_set(self)
        return tuple(framework.labels[index] for index in self)


@dataclass(frozen=True)
class ExtensionSet:
    """A duplicate-free collection of ArgSets kept in canonical order."""

    members: tuple[ArgSet, ...]
    width: int
    _lookup: frozenset[int] = field(
        init=False, repr=False, compare=False,
    )

    def __post_init__(self):
        keys = [member.sort_key for member in self.members]
        if any(member.width != self.width for member in self.members):
            raise FrameworkError('Extension members index different frameworks')
        if any(first >= second for first, second in zip(keys, keys[1:])):
            raise FrameworkError(
                'Extension members must be unique and canonically ordered',
            )
        object.__setattr__(
            self, '_lookup', frozenset(m.bits for m in self.members),
        )

    @classmethod
    def from_bits(cls, bit_values: Iterable[int], width: int) -> ExtensionSet:
        """Build a canonical collection from raw bit-vectors, deduplicating."""
        ordered = sorted(set(bit_values), key=lambda b: (b.bit_count(), b))
        return cls(tuple(ArgSet(bits, width) for bits in ordered), width)

    @classmethod
    def of(cls, sets: Iterable[ArgSet], width: int) -> ExtensionSet:
        sets = list(sets)
        for member in sets:
            if member.width != width:
                raise FrameworkError(
                    'Extension members index different frameworks',
                )
        return cls.from_bits((member.bits for member in sets), width)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[ArgSet]:
        return iter(self.members)

    def __contains__(self, candidate: object) -> bool:
        return (
            isinstance(candidate, ArgSet)
            and candidate.width == self.width
            and candidate.bits in self._lookup
        )

    def union(self) -> ArgSet:
        bits = 0
        for member in self.members:
            bits |= member.bits
        return ArgSet(bits, self.width)

    def issubset(self, other: ExtensionSet) -> bool:
        return self.width == other.width and self._lookup <= other._lookup

    def difference(self, other: ExtensionSet) -> ExtensionSet:
        if self.width != other.width:
            raise FrameworkError('Extension sets index different frameworks')
        return ExtensionSet(
            tuple(m for m in self.members if m.bits not in other._lookup),
            self.width,
        )

    def labels(self, framework: Framework) -> list[tuple[str, ...]]:
        return [member.labels(framework) for member in self.members]


@dataclass(frozen=True)
class Framework:
    """
    A finite argumentation framework (A, R).

    Arguments are dense indices ``0..n-1`` named by ``labels``; ``attacks``
    holds ``(attacker, target)`` index pairs. ``origin`` maps every argument
    to its index in the framework this one was cut from (identity for a
    framework built from scratch), so reducts of reducts stay identifiable.
    """

    labels: tuple[str, ...]
    attacks: frozenset[tuple[int, int]]
    origin: tuple[int, ...] = ()
    successors: tuple[int, ...] = field(
        init=False, repr=False, compare=False,
    )
    predecessors: tuple[int, ...] = field(
        init=False, repr=False, compare=False,
    )
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        index: dict[str, int] = {}
        for position, label in enumerate(self.labels):
            if label in index:
                raise DuplicateLabelError(label)
            index[label] = position

        if not self.origin:
            object.__setattr__(self, 'origin', tuple(range(n)))
        elif len(self.origin) != n:
            raise FrameworkError('origin must name one index per argument')

        successors = [0] * n
        predecessors = [0] * n
        for attacker, target in self.attacks:
            if not (0 <= attacker < n and 0 <= target < n):
                raise FrameworkError(
                    f'Attack ({attacker}, {target}) outside [0, {n})',
                )
            successors[attacker] |= 1 << target
            predecessors[target] |= 1 << attacker

        object.__setattr__(self, 'successors', tuple(successors))
        object.__setattr__(self, 'predecessors', tuple(predecessors))
        object.__setattr__(self, '_index', index)

    @property
    def arg_count(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def sorted_attacks(self) -> list[tuple[int, int]]:
        """Attack pairs in (source, target) index order."""
        return sorted(self.attacks)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def check_set(self, subset: ArgSet) -> None:
        if subset.width != self.arg_count:
            raise FrameworkError(
                f'Argument set of width {subset.width} used with a '
                f'framework of {self.arg_count} arguments',
            )

    def empty_set(self) -> ArgSet:
        return ArgSet(0, self.arg_count)

    def full_set(self) -> ArgSet:
        return ArgSet(self.full_mask, self.arg_count)

    def set_of(self, *labels: str) -> ArgSet:
        """The argument set with the given labels."""
        return ArgSet.from_indices(
            (self.index_of(label) for label in labels), self.arg_count,
        )

    def subsets(self) -> Iterator[ArgSet]:
        """Every subset of the arguments, in canonical order."""
        ordered = sorted(
            range(1 << self.arg_count), key=lambda b: (b.bit_count(), b),
        )
        for bits in ordered:
            yield ArgSet(bits, self.arg_count)


def build_framework(
    labels: Sequence[str],
    attack_pairs: Iterable[tuple[str, str]],
) -> Framework:
    """
    Build a framework from argument names and attacks between them.

    Indices follow declaration order. Repeated attacks collapse into one;
    self-attacks are kept.

    Raises:
        DuplicateLabelError: If a name is declared twice.
        UnknownLabelError: If an attack names an undeclared argument.
    """
    index: dict[str, int] = {}
    for position, label in enumerate(labels):
        if label in index:
            raise DuplicateLabelError(label)
        index[label] = position

    attacks = set()
    for attacker, target in attack_pairs:
        for label in (attacker, target):
            if label not in index:
                raise UnknownLabelError(label)
        attacks.add((index[attacker], index[target]))

    return Framework(labels=tuple(labels), attacks=frozenset(attacks))


def attackers_of(framework: Framework, subset: ArgSet) -> ArgSet:
    """Arguments attacking some member of ``subset``."""
    framework.check_set(subset)
    return ArgSet(
        union_of_masks(framework.predecessors, subset.bits),
        framework.arg_count,
    )


def targets_of(framework: Framework, subset: ArgSet) -> ArgSet:
    """Arguments attacked by some member of ``subset``."""
    framework.check_set(subset)
    return ArgSet(
        union_of_masks(framework.successors, subset.bits),
        framework.arg_count,
    )


def attacks_set(framework: Framework, subset: ArgSet, other: ArgSet) -> bool:
    """Whether some member of ``subset`` attacks some member of ``other``."""
    framework.check_set(other)
    return not targets_of(framework, subset).isdisjoint(other)


def range_closure(
    framework: Framework, extension: ArgSet,
) -> tuple[ArgSet, ArgSet]:
    """Return ``(E+, E⊕)``: what E attacks, and E together with it."""
    plus = targets_of(framework, extension)
    return plus, plus | extension


def is_conflict_free(framework: Framework, subset: ArgSet) -> bool:
    return targets_of(framework, subset).isdisjoint(subset)


def is_admissible(framework: Framework, subset: ArgSet) -> bool:
    """Conflict-free and counterattacking every attacker."""
    plus = targets_of(framework, subset)
    if not plus.isdisjoint(subset):
        return False
    return attackers_of(framework, subset).issubset(plus)


def restrict(framework: Framework, keep: ArgSet) -> Framework:
    """
    Keep every argument but only the attacks with both ends in ``keep``.
    """
    framework.check_set(keep)
    attacks = frozenset(
        (attacker, target)
        for attacker, target in framework.attacks
        if attacker in keep and target in keep
    )
    return Framework(
        labels=framework.labels, attacks=attacks, origin=framework.origin,
    )


def reduct(framework: Framework, extension: ArgSet) -> Framework:
    """
    The subframework induced by the arguments outside E⊕.

    Labels and origin indices are carried over from ``framework``.
    """
    _, oplus = range_closure(framework, extension)
    if not oplus.bits:
        return framework

    survivors = list(framework.full_set() - oplus)
    position = {old: new for new, old in enumerate(survivors)}
    attacks = frozenset(
        (position[attacker], position[target])
        for attacker, target in framework.attacks
        if attacker in position and target in position
    )
    sub = Framework(
        labels=tuple(framework.labels[i] for i in survivors),
        attacks=attacks,
        origin=tuple(framework.origin[i] for i in survivors),
    )
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(
            'Reduct by %s keeps %d of %d arguments',
            extension.labels(framework), sub.arg_count, framework.arg_count,
        )
    return sub


def lift(sub: Framework, subset: ArgSet, parent: Framework) -> ArgSet:
    """Re-index a set of ``sub`` (a reduct of ``parent``) against ``parent``."""
    sub.check_set(subset)
    return parent.set_of(*subset.labels(sub))
