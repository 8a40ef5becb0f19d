"""Minimal deterministic rasterizer and PNG encoder.

Shapes are filled by exact per-row span arithmetic (every shape drawn
here is convex: discs, oriented rectangles, triangles), composited in
painter order onto an RGB byte canvas. No anti-aliasing, no floating
point accumulation across pixels, no external imaging library, so the
output bytes depend only on the draw calls.
"""

from __future__ import annotations

import math
import struct
import zlib

import numpy as np

from .errors import ParameterError

Color = tuple[int, int, int]


class Canvas:
    def __init__(self, width: int, height: int, background: Color = (255, 255, 255)):
        if width <= 0 or height <= 0:
            raise ParameterError(f"canvas size must be positive, got {width}x{height}")
        self.width = width
        self.height = height
        self.pixels = np.empty((height, width, 3), dtype=np.uint8)
        self.pixels[:, :] = background

    # -- span helpers -----------------------------------------------------

    def _rows(self, y_min: float, y_max: float) -> np.ndarray:
        lo = max(int(math.floor(y_min - 0.5)) + 1, 0)
        hi = min(int(math.floor(y_max - 0.5)), self.height - 1)
        if hi < lo:
            return np.empty(0, dtype=int)
        return np.arange(lo, hi + 1)

    def _fill_spans(self, rows: np.ndarray, x_lo: np.ndarray, x_hi: np.ndarray, color: Color):
        col = np.array(color, dtype=np.uint8)
        x0 = np.maximum(np.floor(x_lo - 0.5).astype(int) + 1, 0)
        x1 = np.minimum(np.floor(x_hi - 0.5).astype(int), self.width - 1)
        for y, a, b in zip(rows, x0, x1):
            if b >= a:
                self.pixels[y, a : b + 1] = col

    # -- shapes ------------------------------------------------------------

    def fill_disc(self, cx: float, cy: float, radius: float, color: Color):
        rows = self._rows(cy - radius, cy + radius)
        if rows.size == 0:
            return
        yc = rows + 0.5
        inside = radius * radius - (yc - cy) ** 2
        half = np.sqrt(np.maximum(inside, 0.0))
        self._fill_spans(rows, cx - half, cx + half, color)

    def fill_convex(self, points: list[tuple[float, float]], color: Color):
        """Convex polygon fill; vertices in drawing order."""
        pts = np.asarray(points, dtype=float)
        rows = self._rows(pts[:, 1].min(), pts[:, 1].max())
        if rows.size == 0:
            return
        yc = rows + 0.5
        k = len(pts)
        xs = np.full((k, rows.size), np.nan)
        for i in range(k):
            ax, ay = pts[i]
            bx, by = pts[(i + 1) % k]
            if ay == by:
                continue
            t = (yc - ay) / (by - ay)
            valid = (t >= 0.0) & (t <= 1.0)
            xs[i, valid] = ax + t[valid] * (bx - ax)
        with np.errstate(all="ignore"):
            x_lo = np.nanmin(xs, axis=0)
            x_hi = np.nanmax(xs, axis=0)
        ok = np.isfinite(x_lo) & np.isfinite(x_hi)
        self._fill_spans(rows[ok], x_lo[ok], x_hi[ok], color)

    def fill_rect(self, x0: float, y0: float, x1: float, y1: float, color: Color):
        self.fill_convex([(x0, y0), (x1, y0), (x1, y1), (x0, y1)], color)

    def stroke_segment(self, p: tuple[float, float], q: tuple[float, float], width: float, color: Color):
        """Thick line with round caps (rectangle plus two end discs)."""
        px, py = p
        qx, qy = q
        dx, dy = qx - px, qy - py
        length = math.hypot(dx, dy)
        r = width / 2.0
        if length < 1e-9:
            self.fill_disc(px, py, r, color)
            return
        nx, ny = -dy / length * r, dx / length * r
        self.fill_convex(
            [(px + nx, py + ny), (qx + nx, qy + ny), (qx - nx, qy - ny), (px - nx, py - ny)],
            color,
        )
        self.fill_disc(px, py, r, color)
        self.fill_disc(qx, qy, r, color)

    def stroke_polyline(self, points: list[tuple[float, float]], width: float, color: Color):
        for a, b in zip(points, points[1:]):
            self.stroke_segment(a, b, width, color)

    def to_png(self) -> bytes:
        return encode_png(self.pixels)


def encode_png(pixels: np.ndarray) -> bytes:
    """8-bit RGB PNG, filter type 0 on every scanline, fixed zlib level."""
    height, width, channels = pixels.shape
    if channels != 3 or pixels.dtype != np.uint8:
        raise ParameterError("encode_png expects uint8 RGB pixels")
    raw = b"".join(b"\x00" + pixels[y].tobytes() for y in range(height))

    def chunk(tag: bytes, payload: bytes) -> bytes:
        body = tag + payload
        return struct.pack(">I", len(payload)) + body + struct.pack(">I", zlib.crc32(body))

    ihdr = struct.pack(">IIBBBBB", width, height, 8, 2, 0, 0, 0)
    return b"".join(
        [
            b"\x89PNG\r\n\x1a\n",
            chunk(b"IHDR", ihdr),
            chunk(b"IDAT", zlib.compress(raw, 6)),
            chunk(b"IEND", b""),
        ]
    )


def png_dimensions(data: bytes) -> tuple[int, int]:
    """(width, height) straight from the IHDR chunk."""
    if data[:8] != b"\x89PNG\r\n\x1a\n" or data[12:16] != b"IHDR":
        raise ParameterError("not a PNG file")
    width, height = struct.unpack(">II", data[16:24])
    return width, height
