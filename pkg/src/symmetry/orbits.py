#!/usr/bin/env python3
"""
Orbits of a 6j symbol under its symmetry group.

The 24 classical symmetries are the 3! column permutations combined with
swapping upper and lower entries in any two columns. Adding the Regge
transform generates a group of order 144. Canonical forms are the
lexicographic minimum of the full orbit keyed on (j1, j2, j3, j, j12, j23).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Tuple

from src.angular.labels import SixJLabels
from src.symmetry.regge import regge_transform

logger = logging.getLogger(__name__)

_FLIP_SETS: Tuple[Tuple[int, ...], ...] = ((), (0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class SymmetryOrbit:
    """
    A set of symbols related by symmetries.

    Attributes:
        elements: Distinct labels in the orbit
        generators_applied: Provenance tags of the generators used to build it
    """
    elements: FrozenSet[SixJLabels]
    generators_applied: Tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, labels: SixJLabels) -> bool:
        return labels in self.elements


def classical_images(labels: SixJLabels) -> List[SixJLabels]:
    """All 24 classical rearrangements, duplicates included."""
    top, bottom = labels.rows()
    columns = list(zip(top, bottom))
    images = []
    for perm in itertools.permutations(range(3)):
        for flips in _FLIP_SETS:
            cols = []
            for k, c in enumerate(perm):
                upper, lower = columns[c]
                cols.append((lower, upper) if k in flips else (upper, lower))
            images.append(SixJLabels(cols[0][0], cols[1][0], cols[2][0],
                                     cols[0][1], cols[1][1], cols[2][1]))
    return images


def classical_orbit(labels: SixJLabels) -> SymmetryOrbit:
    """
    Orbit under the 24 tetrahedral symmetries.

    Args:
        labels: Valid 6j labels

    Returns:
        Deduplicated orbit; its size divides 24
    """
    return SymmetryOrbit(elements=frozenset(classical_images(labels)), generators_applied=("classical",))


def _closure(seed: SixJLabels, moves: List[Callable[[SixJLabels], List[SixJLabels]]]) -> FrozenSet[SixJLabels]:
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for item in frontier:
            for move in moves:
                for image in move(item):
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
        frontier = nxt
    return frozenset(seen)


def full_orbit(labels: SixJLabels) -> SymmetryOrbit:
    """
    Orbit under classical and Regge symmetries together.

    Args:
        labels: Valid 6j labels

    Returns:
        Closure of the classical orbit under regge_transform; size divides 144
    """
    elements = _closure(labels, [classical_images, lambda x: [regge_transform(x)]])
    logger.debug(f"full orbit of {labels}: {len(elements)} elements")
    return SymmetryOrbit(elements=elements, generators_applied=("classical", "regge"))


def canonical_key(labels: SixJLabels) -> Tuple[int, ...]:
    return (labels.j1.twice, labels.j2.twice, labels.j3.twice,
            labels.j.twice, labels.j12.twice, labels.j23.twice)


def canonical_form(labels: SixJLabels) -> SixJLabels:
    """
    Lexicographically least member of the full orbit.

    Args:
        labels: Valid 6j labels

    Returns:
        Deterministic representative, shared by every orbit member
    """
    return min(full_orbit(labels).elements, key=canonical_key)


def orbit_sizes(labels: SixJLabels) -> Dict[str, int]:
    """Classical and full orbit sizes, for reports."""
    return {"classical": classical_orbit(labels).size, "full": full_orbit(labels).size}
