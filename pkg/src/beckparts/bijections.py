"""The constructive maps behind the counting identities.

Everything here is built on one classical correspondence between odd and
distinct partitions plus multiset surgery on a single distinguished run.

The doubling/halving (Glaisher) correspondence:

* distinct -> odd: each part ``2^k * q`` with q odd contributes ``2^k``
  copies of q;
* odd -> distinct: each odd part q with multiplicity m contributes the
  parts ``2^k * q`` for the binary digits 2^k of m.

The theta maps form partitions with exactly one even part value into
partitions with exactly one repeated part, or into witness pairs.  Writing
an input of the first kind as the even run (ev repeated ``mult`` times)
plus an odd remainder, and D for the distinct image of that remainder:

``theta1`` (one even value, odd multiplicity -> repeated odd part):
    if mult not in D:   (mult repeated ev times) + D
    else:               (mult repeated ev+1 times) + D minus one mult

``theta1_even`` (one even value, even multiplicity -> repeated even part):
    the same rule verbatim; mult is now even, so the repeated part is even.
    This mirrored variant is a derived construction: its concrete rule is
    ours, and its correctness contract is the exhaustive bijection check in
    the verification suite, not a published derivation.

``theta2`` (one even value, odd multiplicity -> one even value with even
multiplicity, or a witness pair):
    if ev in D:                 (ev repeated mult+1 times) + odd(D minus one ev)
    elif mult > 1:              (ev repeated mult-1 times) + odd(D plus ev)
    else:                       the witness pair (D plus ev, ev)

Each inverse recovers the even run's value and multiplicity from what the
forward rule did with them and undoes the odd/distinct conversion; all
round trips are machine-checked exhaustively.

Every map takes the odd<->distinct correspondence as a parameter (a
``BijectionPair``), defaulting to Glaisher's; the constructions stay
bijections for any sum-preserving bijection pair supplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .partitions import Partition, WitnessPair, add, remove_one, repeat


class DomainError(ValueError):
    """Input is outside the domain the requested map is defined on."""


def glaisher_to_odd(lam: Partition) -> Partition:
    """Distinct -> odd: split each part into (odd value) * 2^k and fan out copies."""
    if not lam.is_distinct():
        raise DomainError(f"not a distinct partition: {lam}")
    counts: dict[int, int] = {}
    for part, _ in lam.entries:
        copies = 1
        while part % 2 == 0:
            part //= 2
            copies *= 2
        counts[part] = counts.get(part, 0) + copies
    return Partition(tuple(sorted(counts.items(), reverse=True)))


def glaisher_to_distinct(lam: Partition) -> Partition:
    """Odd -> distinct: binary-decompose each multiplicity; inverse of the above."""
    if not lam.is_odd():
        raise DomainError(f"not an odd partition: {lam}")
    parts = []
    for value, mult in lam.entries:
        power = 1
        while mult:
            if mult & 1:
                parts.append((value * power, 1))
            mult >>= 1
            power <<= 1
    return Partition(tuple(sorted(parts, reverse=True)))


@dataclass(frozen=True)
class BijectionPair:
    """A bijection between odd and distinct partitions of every n, both ways."""

    name: str
    to_distinct: Callable[[Partition], Partition]
    to_odd: Callable[[Partition], Partition]


GLAISHER = BijectionPair("glaisher", glaisher_to_distinct, glaisher_to_odd)


ThetaTwoImage = Union[Partition, WitnessPair]
"""Codomain of theta2: either a one-even-value partition with even
multiplicity, or a witness pair.  The two cases are distinguished by type."""


# -- domain splits ---------------------------------------------------------


def _split_one_even(lam: Partition, want_odd_mult: bool) -> tuple[int, int, Partition]:
    evens = lam.even_entries()
    if len(evens) != 1:
        raise DomainError(f"expected exactly one even part value: {lam}")
    even_value, mult = evens[0]
    if (mult % 2 == 1) != want_odd_mult:
        parity = "odd" if want_odd_mult else "even"
        raise DomainError(
            f"even value {even_value} must have {parity} multiplicity: {lam}"
        )
    return even_value, mult, Partition(lam.odd_entries())


def _split_one_repeated(lam: Partition, want_odd_part: bool) -> tuple[int, int, Partition]:
    reps = lam.repeated_entries()
    if len(reps) != 1:
        raise DomainError(f"expected exactly one repeated part: {lam}")
    value, mult = reps[0]
    if (value % 2 == 1) != want_odd_part:
        parity = "odd" if want_odd_part else "even"
        raise DomainError(f"repeated part {value} must be {parity}: {lam}")
    rest = Partition(tuple((p, m) for p, m in lam.entries if p != value))
    return value, mult, rest


# -- the repeated-part rule (theta1 and its even mirror) --------------------


def _fold_to_repeat(even_value: int, mult: int, distinct_image: Partition) -> Partition:
    if mult in distinct_image:
        return add(repeat(mult, even_value + 1), remove_one(distinct_image, mult))
    return add(repeat(mult, even_value), distinct_image)


def _unfold_from_repeat(value: int, times: int, rest: Partition, pair: BijectionPair) -> Partition:
    # times even: it was the even value and `value` the multiplicity, rest = D.
    # times odd: the even value was times-1 and one copy of `value` was pulled
    # out of D, so put it back before converting.
    if times % 2 == 0:
        return add(repeat(times, value), pair.to_odd(rest))
    return add(repeat(times - 1, value), pair.to_odd(add(rest, repeat(value, 1))))


def theta1(lam: Partition, pair: BijectionPair = GLAISHER) -> Partition:
    """One even value with odd multiplicity -> exactly one repeated part, odd."""
    even_value, mult, odds = _split_one_even(lam, want_odd_mult=True)
    return _fold_to_repeat(even_value, mult, pair.to_distinct(odds))


def theta1_inv(mu: Partition, pair: BijectionPair = GLAISHER) -> Partition:
    """Inverse of theta1."""
    value, times, rest = _split_one_repeated(mu, want_odd_part=True)
    return _unfold_from_repeat(value, times, rest, pair)


def theta1_even(lam: Partition, pair: BijectionPair = GLAISHER) -> Partition:
    """One even value with even multiplicity -> exactly one repeated part, even.

    Derived mirror of theta1; see the module docstring for its status.
    """
    even_value, mult, odds = _split_one_even(lam, want_odd_mult=False)
    return _fold_to_repeat(even_value, mult, pair.to_distinct(odds))


def theta1_even_inv(mu: Partition, pair: BijectionPair = GLAISHER) -> Partition:
    """Inverse of theta1_even."""
    value, times, rest = _split_one_repeated(mu, want_odd_part=False)
    return _unfold_from_repeat(value, times, rest, pair)


# -- the multiplicity-shift rule (theta2) -----------------------------------


def theta2(lam: Partition, pair: BijectionPair = GLAISHER) -> ThetaTwoImage:
    """One even value with odd multiplicity -> even multiplicity, or a witness.

    The even value's multiplicity moves to the adjacent even number (up when
    the value already appears in the distinct image, down otherwise); when it
    would drop to zero the whole partition collapses to a witness pair.
    """
    even_value, mult, odds = _split_one_even(lam, want_odd_mult=True)
    image = pair.to_distinct(odds)
    if even_value in image:
        return add(repeat(even_value, mult + 1), pair.to_odd(remove_one(image, even_value)))
    if mult > 1:
        return add(repeat(even_value, mult - 1), pair.to_odd(add(image, repeat(even_value, 1))))
    return WitnessPair(add(image, repeat(even_value, 1)), even_value)


def theta2_inv(image: ThetaTwoImage, pair: BijectionPair = GLAISHER) -> Partition:
    """Inverse of theta2, accepting either codomain variant."""
    if isinstance(image, WitnessPair):
        trimmed = remove_one(image.partition, image.even_part)
        return add(repeat(image.even_part, 1), pair.to_odd(trimmed))
    even_value, mult, odds = _split_one_even(image, want_odd_mult=False)
    distinct_image = pair.to_distinct(odds)
    if even_value in distinct_image:
        return add(
            repeat(even_value, mult + 1),
            pair.to_odd(remove_one(distinct_image, even_value)),
        )
    return add(
        repeat(even_value, mult - 1),
        pair.to_odd(add(distinct_image, repeat(even_value, 1))),
    )
