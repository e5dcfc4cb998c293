"""Pluggable image captioning.

The default captioner is deliberately model-free: it describes what it
can measure (dimensions, overall tone) so the extraction workflow stays
runnable offline.  Swap in a real captioning model by implementing
Captioner.caption.
"""

from __future__ import annotations

import io
from typing import Protocol

from PIL import Image, ImageStat, UnidentifiedImageError

from .errors import AdapterError
from .pdftext import PdfImage

_PALETTE = {
    "red": (200, 40, 40),
    "green": (40, 160, 60),
    "blue": (50, 80, 200),
    "yellow": (220, 200, 60),
    "orange": (230, 130, 40),
    "purple": (130, 60, 170),
    "brown": (120, 80, 50),
    "gray": (128, 128, 128),
    "black": (20, 20, 20),
    "white": (235, 235, 235),
}


class Captioner(Protocol):
    def caption(self, image: bytes | PdfImage, hint: str = "") -> str:
        """Return a one-line textual description of the image."""


def _nearest_color(rgb: tuple[float, float, float]) -> str:
    def dist(name: str) -> float:
        r, g, b = _PALETTE[name]
        return (rgb[0] - r) ** 2 + (rgb[1] - g) ** 2 + (rgb[2] - b) ** 2

    return min(_PALETTE, key=dist)


class BasicImageCaptioner:
    """Measurement-based stand-in for a captioning model."""

    def caption(self, image: bytes | PdfImage, hint: str = "") -> str:
        if isinstance(image, PdfImage):
            pil = self._from_pdf_image(image)
        else:
            try:
                pil = Image.open(io.BytesIO(image))
                pil.load()
            except (UnidentifiedImageError, OSError) as exc:
                raise AdapterError(f"cannot read image {hint or ''}: {exc}") from None
        if pil is None:
            # metadata-only fallback when the samples cannot be rebuilt
            assert isinstance(image, PdfImage)
            return f"an image {image.width} by {image.height} pixels"
        small = pil.convert("RGB").resize((8, 8))
        avg = tuple(ImageStat.Stat(small).mean)
        color = _nearest_color(avg)
        w, h = pil.size
        return f"an image {w} by {h} pixels in mostly {color} tones"

    @staticmethod
    def _from_pdf_image(img: PdfImage) -> Image.Image | None:
        if img.filter == "DCTDecode":
            try:
                pil = Image.open(io.BytesIO(img.data))
                pil.load()
                return pil
            except (UnidentifiedImageError, OSError):
                return None
        size = (img.width, img.height)
        if img.bits != 8 or not all(size):
            return None
        expected = {"DeviceRGB": 3, "DeviceGray": 1}.get(img.color_space)
        if expected is None or len(img.data) < size[0] * size[1] * expected:
            return None
        mode = "RGB" if expected == 3 else "L"
        try:
            return Image.frombytes(
                mode, size, img.data[: size[0] * size[1] * expected]
            )
        except ValueError:
            return None
