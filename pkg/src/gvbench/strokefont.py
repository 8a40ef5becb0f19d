"""Built-in stroke font.

Labels in rendered images are drawn as polyline strokes from this small
bundled glyph set rather than through any system font, so vector and
raster output are identical on every machine. Coordinates are in em
units: x grows right, y grows up, baseline at y=0, cap height at y=1.

Coverage is intentionally tiny: digits (node labels and edge weights)
plus the letters of the panel titles used by paired images.
"""

from __future__ import annotations

Stroke = list[tuple[float, float]]

# char -> (advance width, strokes)
GLYPHS: dict[str, tuple[float, list[Stroke]]] = {
    "0": (
        0.70,
        [
            [
                (0.30, 0.00),
                (0.10, 0.12),
                (0.02, 0.50),
                (0.10, 0.88),
                (0.30, 1.00),
                (0.50, 0.88),
                (0.58, 0.50),
                (0.50, 0.12),
                (0.30, 0.00),
            ]
        ],
    ),
    "1": (
        0.70,
        [
            [(0.12, 0.78), (0.32, 1.00), (0.32, 0.00)],
            [(0.12, 0.00), (0.52, 0.00)],
        ],
    ),
    "2": (
        0.70,
        [
            [
                (0.04, 0.82),
                (0.16, 0.98),
                (0.44, 0.98),
                (0.56, 0.82),
                (0.56, 0.62),
                (0.04, 0.02),
                (0.58, 0.02),
            ]
        ],
    ),
    "3": (
        0.70,
        [
            [(0.06, 0.98), (0.54, 0.98), (0.30, 0.62)],
            [
                (0.30, 0.62),
                (0.48, 0.55),
                (0.56, 0.38),
                (0.52, 0.14),
                (0.36, 0.00),
                (0.14, 0.02),
                (0.04, 0.14),
            ],
        ],
    ),
    "4": (
        0.70,
        [
            [(0.44, 0.00), (0.44, 1.00), (0.02, 0.30), (0.58, 0.30)],
        ],
    ),
    "5": (
        0.70,
        [
            [
                (0.54, 0.98),
                (0.10, 0.98),
                (0.06, 0.56),
                (0.28, 0.64),
                (0.48, 0.56),
                (0.56, 0.36),
                (0.50, 0.12),
                (0.32, 0.00),
                (0.12, 0.02),
                (0.02, 0.14),
            ]
        ],
    ),
    "6": (
        0.70,
        [
            [
                (0.50, 0.94),
                (0.30, 1.00),
                (0.10, 0.84),
                (0.02, 0.50),
                (0.06, 0.14),
                (0.26, 0.00),
                (0.46, 0.06),
                (0.56, 0.26),
                (0.48, 0.44),
                (0.28, 0.50),
                (0.08, 0.40),
            ]
        ],
    ),
    "7": (0.70, [[(0.04, 0.98), (0.58, 0.98), (0.26, 0.00)]]),
    "8": (
        0.70,
        [
            [
                (0.30, 0.54),
                (0.12, 0.64),
                (0.08, 0.84),
                (0.20, 1.00),
                (0.40, 1.00),
                (0.52, 0.84),
                (0.48, 0.64),
                (0.30, 0.54),
                (0.10, 0.42),
                (0.04, 0.16),
                (0.18, 0.00),
                (0.42, 0.00),
                (0.56, 0.16),
                (0.50, 0.42),
                (0.30, 0.54),
            ]
        ],
    ),
    "9": (
        0.70,
        [
            [
                (0.10, 0.06),
                (0.30, 0.00),
                (0.50, 0.16),
                (0.58, 0.50),
                (0.54, 0.86),
                (0.34, 1.00),
                (0.14, 0.94),
                (0.04, 0.74),
                (0.12, 0.56),
                (0.32, 0.50),
                (0.52, 0.60),
            ]
        ],
    ),
    "G": (
        0.76,
        [
            [
                (0.56, 0.84),
                (0.42, 1.00),
                (0.18, 1.00),
                (0.04, 0.84),
                (0.00, 0.50),
                (0.04, 0.16),
                (0.18, 0.00),
                (0.42, 0.00),
                (0.56, 0.12),
                (0.56, 0.42),
                (0.34, 0.42),
            ]
        ],
    ),
    "r": (
        0.52,
        [
            [(0.10, 0.00), (0.10, 0.62)],
            [(0.10, 0.44), (0.24, 0.62), (0.40, 0.62), (0.46, 0.52)],
        ],
    ),
    "a": (
        0.68,
        [
            [(0.52, 0.62), (0.52, 0.00)],
            [
                (0.52, 0.48),
                (0.38, 0.62),
                (0.16, 0.62),
                (0.04, 0.48),
                (0.04, 0.14),
                (0.16, 0.00),
                (0.38, 0.00),
                (0.52, 0.14),
            ],
        ],
    ),
    "p": (
        0.68,
        [
            [(0.08, 0.62), (0.08, -0.34)],
            [
                (0.08, 0.46),
                (0.22, 0.62),
                (0.42, 0.62),
                (0.54, 0.46),
                (0.54, 0.16),
                (0.42, 0.00),
                (0.22, 0.00),
                (0.08, 0.16),
            ],
        ],
    ),
    "h": (
        0.68,
        [
            [(0.08, 1.00), (0.08, 0.00)],
            [(0.08, 0.46), (0.24, 0.62), (0.44, 0.62), (0.52, 0.46), (0.52, 0.00)],
        ],
    ),
    " ": (0.50, []),
}


def text_width(text: str, size: float) -> float:
    """Advance width of ``text`` at the given pixel size."""
    return sum(GLYPHS[ch][0] for ch in text) * size


def text_strokes(
    text: str, cx: float, cy: float, size: float
) -> list[list[tuple[float, float]]]:
    """Polylines (pixel coordinates, y down) for ``text`` centered at
    (cx, cy). Unknown characters raise KeyError; the glyph set is closed.
    """
    width = text_width(text, size)
    x = cx - width / 2.0
    baseline = cy + 0.5 * size  # visual center is mid cap height
    strokes: list[list[tuple[float, float]]] = []
    for ch in text:
        advance, glyph = GLYPHS[ch]
        for line in glyph:
            strokes.append([(x + gx * size, baseline - gy * size) for gx, gy in line])
        x += advance * size
    return strokes
