#!/usr/bin/env python3
"""
Figure preset configuration.

Parameter sets (j1, j2, j3, j) of the reference screen figures, with the
degeneracy flags and diagonal-symmetry certificate each one is expected to
show. The figure command and the regression tests both read from here.
"""

from typing import Dict, List, NamedTuple, Optional, Tuple

from src.angular.half_int import HalfInt
from src.errors import UnknownPreset


class FigurePreset(NamedTuple):
    """Screen figure configuration."""
    name: str
    j1: str
    j2: str
    j3: str
    j: Optional[str]
    caption: str
    flags: Tuple[str, ...] = ()
    piero: Optional[str] = None
    sweep: Optional[str] = None


FIGURE_PRESETS: Dict[str, FigurePreset] = {
    "fig1a": FigurePreset(
        name="fig1a", j1="45", j2="30", j3="55", j="60",
        caption="Generic screen, caustic and both ridges",
    ),
    "fig1b": FigurePreset(
        name="fig1b", j1="140", j2="130", j3="110", j="100",
        caption="Caustic touching the upper left corner",
        flags=("B",),
    ),
    "fig1c": FigurePreset(
        name="fig1c", j1="140", j2="100", j3="110", j="130",
        caption="Caustic touching the lower right corner",
        flags=("C",),
    ),
    "fig1d": FigurePreset(
        name="fig1d", j1="140", j2="110", j3="100", j="130",
        caption="Caustic touching the lower left corner",
        flags=("D",),
    ),
    "fig2": FigurePreset(
        name="fig2", j1="100", j2="100", j3="150", j="210",
        caption="Screen with j1 = j2, no diagonal symmetry",
    ),
    "fig3": FigurePreset(
        name="fig3", j1="100", j2="150", j3="100", j="210",
        caption="Screen with j1 = j3, symmetric about the diagonal",
        piero="j1=j3",
    ),
    "fig4a": FigurePreset(
        name="fig4a", j1="200", j2="100", j3="200", j="100",
        caption="Two degeneracies, diagonal symmetric",
        flags=("B", "C"), piero="j1=j3, j2=j",
    ),
    "fig4b": FigurePreset(
        name="fig4b", j1="110", j2="100", j3="110", j="100",
        caption="Two degeneracies, nearly square screen",
        flags=("B", "C"), piero="j1=j3, j2=j",
    ),
    "fig5": FigurePreset(
        name="fig5", j1="1000", j2="1000", j3="100", j="100",
        caption="Two large entries, J23 in [900, 1101]",
        flags=("B", "D"),
    ),
    "fig6": FigurePreset(
        name="fig6", j1="100", j2="100", j3="100", j="100",
        caption="Fully symmetric screen",
        flags=("B", "C", "D"), piero="j1=j3, j2=j",
    ),
    "fig7": FigurePreset(
        name="fig7", j1="100", j2="100", j3="100", j=None,
        caption="Caustic family for j1 = j2 = j3 = 100 with j varied",
        sweep="j=25:275:25",
    ),
}


def get_preset(name: str) -> FigurePreset:
    """
    Get a figure preset by name.

    Args:
        name: Preset name (e.g., 'fig1a', 'fig6')

    Returns:
        FigurePreset with parameters and expectations

    Raises:
        UnknownPreset: If name is not registered
    """
    if name not in FIGURE_PRESETS:
        valid = list(FIGURE_PRESETS.keys())
        raise UnknownPreset(f"Unknown figure preset '{name}'. Valid presets: {valid}")
    return FIGURE_PRESETS[name]


def list_presets() -> Dict[str, str]:
    """
    List all figure presets with their captions.

    Returns:
        Dictionary mapping preset names to captions
    """
    return {name: preset.caption for name, preset in FIGURE_PRESETS.items()}


def parse_sweep(spec: str) -> Tuple[str, List[HalfInt]]:
    """
    Parse a sweep such as "j=25:275:25" (inclusive stop).

    Returns:
        (parameter name, values)

    Raises:
        ValueError: If the text is malformed or the step is not positive
    """
    try:
        name, rng = spec.split("=", 1)
        start, stop, step = (HalfInt.parse(part) for part in rng.split(":"))
    except ValueError as e:
        raise ValueError(f"Malformed sweep '{spec}', expected name=start:stop:step") from e
    name = name.strip()
    if name not in ("j1", "j2", "j3", "j"):
        raise ValueError(f"Sweep parameter must be one of j1, j2, j3, j; got '{name}'")
    if step.twice <= 0:
        raise ValueError(f"Sweep step must be positive, got {step}")
    values = [HalfInt(t) for t in range(start.twice, stop.twice + 1, step.twice)]
    return name, values


def preset_quadruples(preset: FigurePreset) -> List[Tuple[HalfInt, HalfInt, HalfInt, HalfInt]]:
    """All (j1, j2, j3, j) parameter sets of a preset, one per swept value."""
    base = {"j1": preset.j1, "j2": preset.j2, "j3": preset.j3, "j": preset.j}
    if preset.sweep is None:
        return [tuple(HalfInt.parse(base[k]) for k in ("j1", "j2", "j3", "j"))]
    name, values = parse_sweep(preset.sweep)
    quads = []
    for v in values:
        base[name] = str(v)
        quads.append(tuple(HalfInt.parse(base[k]) for k in ("j1", "j2", "j3", "j")))
    return quads
