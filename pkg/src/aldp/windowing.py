"""Non-overlapping square tiling of an image into per-window feature histograms."""

from __future__ import annotations

from dataclasses import dataclass

from .descriptors import Descriptor, extract
from .imgio import GrayImage


@dataclass(frozen=True)
class WindowGrid:
    window: int
    grid_rows: int
    grid_cols: int

    @property
    def total(self) -> int:
        return self.grid_rows * self.grid_cols

    def origins(self) -> list[tuple[int, int]]:
        """Top-left corner of every window, row-major."""
        w = self.window
        return [(r * w, c * w) for r in range(self.grid_rows) for c in range(self.grid_cols)]


def make_grid(img: GrayImage, window: int) -> WindowGrid:
    """Tile with stride == window; remainder rows/columns are dropped."""
    if window < 3:
        raise ValueError(f"window side {window} is below 3 (no 3x3 neighbourhood)")
    if window > min(img.rows, img.cols):
        raise ValueError(f"window side {window} exceeds the {img.rows}x{img.cols} image")
    return WindowGrid(window, img.rows // window, img.cols // window)


def windows(img: GrayImage, window: int) -> list[GrayImage]:
    grid = make_grid(img, window)
    return [img.crop(x0, y0, window, window) for x0, y0 in grid.origins()]


def windowed_features(img: GrayImage, window: int, descriptor: Descriptor) -> list[list[int]]:
    """One histogram per window in row-major order.

    Each window is extracted as a standalone image, so its border pixels are
    clamped to the window rather than read from the neighbouring tiles.
    """
    return [extract(tile, descriptor) for tile in windows(img, window)]
