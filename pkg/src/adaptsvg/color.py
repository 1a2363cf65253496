"""Colour math: WCAG luminance/contrast, dichromacy simulation, Lab distance.

Everything operates on 8-bit sRGB triples. The dichromat projections are the
Viénot, Brettel & Mollon (1999) matrices in linear RGB; they are exact
projections (M·M == M), so simulating a simulated colour is a fixed point up
to 8-bit quantisation.
"""

from __future__ import annotations

Rgb = tuple[int, int, int]

CVD_KINDS = ("protanopia", "deuteranopia", "tritanopia")

# Viénot, Brettel & Mollon (1999), linear-RGB dichromat projections.
_CVD_MATRICES: dict[str, tuple[tuple[float, float, float], ...]] = {
    "protanopia": (
        (0.11238, 0.88762, 0.00000),
        (0.11238, 0.88762, 0.00000),
        (0.00401, -0.00401, 1.00000),
    ),
    "deuteranopia": (
        (0.29275, 0.70725, 0.00000),
        (0.29275, 0.70725, 0.00000),
        (-0.02234, 0.02234, 1.00000),
    ),
    "tritanopia": (
        (1.00000, 0.14461, -0.14461),
        (0.00000, 0.85924, 0.14076),
        (0.00000, 0.85924, 0.14076),
    ),
}

_NAMED_COLOURS = {
    "black": (0, 0, 0),
    "white": (255, 255, 255),
    "red": (255, 0, 0),
    "green": (0, 128, 0),
    "blue": (0, 0, 255),
    "yellow": (255, 255, 0),
    "orange": (255, 165, 0),
    "purple": (128, 0, 128),
    "gray": (128, 128, 128),
    "grey": (128, 128, 128),
    "silver": (192, 192, 192),
}


class ColourError(ValueError):
    pass


def parse_colour(value: str) -> Rgb | None:
    """#rgb/#rrggbb or a small set of CSS names; None when unparseable."""
    value = value.strip().lower()
    if value in _NAMED_COLOURS:
        return _NAMED_COLOURS[value]
    if value.startswith("#"):
        digits = value[1:]
        if len(digits) == 3:
            digits = "".join(d * 2 for d in digits)
        if len(digits) == 6:
            try:
                return (int(digits[0:2], 16), int(digits[2:4], 16), int(digits[4:6], 16))
            except ValueError:
                return None
    return None


def parse_hex(value: str) -> Rgb:
    rgb = parse_colour(value)
    if rgb is None:
        raise ColourError(f"not a colour: {value!r}")
    return rgb


def format_hex(rgb: Rgb) -> str:
    return "#{:02X}{:02X}{:02X}".format(*rgb)


def _to_linear(channel: int) -> float:
    s = channel / 255.0
    return s / 12.92 if s <= 0.03928 else ((s + 0.055) / 1.055) ** 2.4


def _from_linear(value: float) -> int:
    value = min(1.0, max(0.0, value))
    s = value * 12.92 if value <= 0.0031308 else 1.055 * value ** (1 / 2.4) - 0.055
    return min(255, max(0, round(s * 255)))


def relative_luminance(rgb: Rgb) -> float:
    """WCAG 2.0 relative luminance in [0, 1]."""
    r, g, b = (_to_linear(c) for c in rgb)
    return 0.2126 * r + 0.7152 * g + 0.0722 * b


def contrast_ratio(a: Rgb, b: Rgb) -> float:
    """WCAG contrast ratio in [1, 21]; symmetric in its arguments."""
    la, lb = relative_luminance(a), relative_luminance(b)
    lighter, darker = (la, lb) if la >= lb else (lb, la)
    return (lighter + 0.05) / (darker + 0.05)


def simulate_cvd(rgb: Rgb, kind: str) -> Rgb:
    """Project a colour onto a dichromat gamut (linearize, project, clamp)."""
    if kind not in _CVD_MATRICES:
        raise ColourError(f"unknown dichromacy kind {kind!r}; expected one of {', '.join(CVD_KINDS)}")
    matrix = _CVD_MATRICES[kind]
    linear = tuple(_to_linear(c) for c in rgb)
    return tuple(  # type: ignore[return-value]
        _from_linear(row[0] * linear[0] + row[1] * linear[1] + row[2] * linear[2])
        for row in matrix
    )


# sRGB D65 → XYZ, then CIE Lab; used for perceptual palette distances.
_XYZ_ROWS = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.2126729, 0.7151522, 0.0721750),
    (0.0193339, 0.1191920, 0.9503041),
)
_D65 = (0.95047, 1.0, 1.08883)


def _xyz(rgb: Rgb) -> tuple[float, float, float]:
    linear = tuple(_to_linear(c) for c in rgb)
    return tuple(  # type: ignore[return-value]
        row[0] * linear[0] + row[1] * linear[1] + row[2] * linear[2] for row in _XYZ_ROWS
    )


def _lab_f(t: float) -> float:
    return t ** (1 / 3) if t > 0.008856 else 7.787 * t + 16 / 116


def to_lab(rgb: Rgb) -> tuple[float, float, float]:
    x, y, z = (_lab_f(v / w) for v, w in zip(_xyz(rgb), _D65))
    return (116 * y - 16, 500 * (x - y), 200 * (y - z))


def delta_e(a: Rgb, b: Rgb) -> float:
    """CIE76 colour difference."""
    la, lb = to_lab(a), to_lab(b)
    return sum((p - q) ** 2 for p, q in zip(la, lb)) ** 0.5
