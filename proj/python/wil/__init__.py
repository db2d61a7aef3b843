"""Weighted item layout: greedy constructors, ant colony search and an exhaustive oracle."""

from ._wil import (
    AcoParams,
    AcoVariant,
    CircleItem,
    CircleLayout,
    Orientation,
    RectItem,
    RectLayout,
    generate_instance,
    layout_json,
    load_instance,
    oracle,
    place_circles,
    place_rects,
    render_svg,
    solve,
)

__all__ = [
    "AcoParams",
    "AcoVariant",
    "CircleItem",
    "CircleLayout",
    "Orientation",
    "RectItem",
    "RectLayout",
    "generate_instance",
    "layout_json",
    "load_instance",
    "oracle",
    "place_circles",
    "place_rects",
    "render_svg",
    "solve",
]
