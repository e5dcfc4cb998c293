"""Small PDF reader: per-page text plus embedded image streams.

Covers the narrow slice of PDF needed here: classic cross-reference
layout, Flate or raw content streams, text shown with Tj/'/"/TJ, and
image XObjects (JPEG or Flate-packed samples).  Anything else raises
PdfParseError and the caller decides what to do with the file.
"""

from __future__ import annotations

import base64
import re
import zlib
from dataclasses import dataclass

from .errors import PdfParseError

_OBJ_RE = re.compile(rb"(\d+)\s+\d+\s+obj\b(.*?)endobj", re.S)
_REF_RE = re.compile(rb"(\d+)\s+\d+\s+R\b")
_ESCAPES = {
    ord("n"): b"\n",
    ord("r"): b"\r",
    ord("t"): b"\t",
    ord("b"): b"\b",
    ord("f"): b"\f",
    ord("("): b"(",
    ord(")"): b")",
    ord("\\"): b"\\",
}


@dataclass(frozen=True)
class PdfImage:
    width: int
    height: int
    filter: str
    color_space: str
    bits: int
    data: bytes


@dataclass(frozen=True)
class PdfPage:
    text: str
    images: tuple[PdfImage, ...]


def _split_object(body: bytes) -> tuple[bytes, bytes | None]:
    """Return (dictionary part, stream payload or None)."""
    at = body.find(b"stream")
    if at == -1:
        return body, None
    head = body[:at]
    payload = body[at + len(b"stream"):]
    if payload.startswith(b"\r\n"):
        payload = payload[2:]
    elif payload.startswith(b"\n"):
        payload = payload[1:]
    end = payload.rfind(b"endstream")
    if end == -1:
        raise PdfParseError("stream without endstream")
    return head, payload[:end].rstrip(b"\r\n")


def _filter_names(head: bytes) -> list[bytes]:
    m = re.search(rb"/Filter\s*(\[[^\]]*\]|/\w+)", head)
    return re.findall(rb"/(\w+)", m.group(1)) if m else []


def _decode_stream(head: bytes, payload: bytes) -> bytes:
    """Apply the filter chain in order; stop at image codecs."""
    data = payload
    for name in _filter_names(head):
        if name == b"ASCII85Decode":
            text = data.strip()
            if text.endswith(b"~>"):
                text = text[:-2]
            try:
                data = base64.a85decode(text, ignorechars=b" \t\r\n\v")
            except ValueError as exc:
                raise PdfParseError(f"bad ASCII85 stream: {exc}") from None
        elif name == b"FlateDecode":
            try:
                data = zlib.decompress(data)
            except zlib.error as exc:
                raise PdfParseError(f"bad Flate stream: {exc}") from None
        else:
            # image codecs and anything exotic pass through as-is
            break
    return data


def _literal_string(data: bytes, i: int) -> tuple[bytes, int]:
    """Scan a (...) string starting at the opening paren."""
    depth = 1
    out = bytearray()
    i += 1
    n = len(data)
    while i < n and depth:
        c = data[i]
        if c == 0x5C and i + 1 < n:
            e = data[i + 1]
            if e in _ESCAPES:
                out += _ESCAPES[e]
                i += 2
            elif 0x30 <= e <= 0x37:
                digits = bytearray([e])
                i += 2
                while i < n and len(digits) < 3 and 0x30 <= data[i] <= 0x37:
                    digits.append(data[i])
                    i += 1
                out.append(int(digits, 8) & 0xFF)
            elif e in (0x0A, 0x0D):
                i += 2  # escaped newline joins lines
            else:
                out.append(e)
                i += 2
        elif c == 0x28:
            depth += 1
            out.append(c)
            i += 1
        elif c == 0x29:
            depth -= 1
            if depth:
                out.append(c)
            i += 1
        else:
            out.append(c)
            i += 1
    return bytes(out), i


def _hex_string(data: bytes, i: int) -> tuple[bytes, int]:
    end = data.find(b">", i)
    if end == -1:
        return b"", len(data)
    digits = re.sub(rb"\s", b"", data[i + 1:end])
    if len(digits) % 2:
        digits += b"0"
    try:
        return bytes.fromhex(digits.decode("ascii")), end + 1
    except ValueError:
        return b"", end + 1


def _shown_text(content: bytes) -> str:
    """Pull the strings handed to the text-showing operators."""
    pieces: list[str] = []
    i = 0
    n = len(content)
    pending: list[bytes] = []
    in_array = False
    while i < n:
        c = content[i]
        if c == 0x28:  # (
            raw, i = _literal_string(content, i)
            pending.append(raw)
            continue
        if c == 0x3C and not content.startswith(b"<<", i):  # < but not <<
            raw, i = _hex_string(content, i)
            pending.append(raw)
            continue
        if c == 0x5B:  # [
            in_array = True
            pending = []
            i += 1
            continue
        if c == 0x5D:  # ]
            in_array = False
            i += 1
            continue
        if content.startswith(b"Tj", i) or content.startswith(b"TJ", i):
            if pending:
                text = b"".join(pending).decode("latin-1")
                if text.strip():
                    pieces.append(text.strip())
            pending = []
            i += 2
            continue
        if c in (0x27, 0x22):  # ' and " also show the pending string
            if pending:
                text = b"".join(pending).decode("latin-1")
                if text.strip():
                    pieces.append(text.strip())
            pending = []
            i += 1
            continue
        if not in_array and c not in b" \t\r\n":
            # any other operator consumes its operands
            if not content.startswith(b"T", i):
                pending = []
        i += 1
    return " ".join(pieces)


def _name_after(key: bytes, head: bytes) -> str:
    m = re.search(key + rb"\s*(?:\[\s*)?/(\w+)", head)
    return m.group(1).decode("ascii") if m else ""


def _int_after(key: bytes, head: bytes) -> int:
    m = re.search(key + rb"\s+(\d+)", head)
    return int(m.group(1)) if m else 0


def _page_order(objects: dict[int, bytes], page_ids: list[int]) -> list[int]:
    """Order pages by walking /Pages -> /Kids; fall back to byte order."""
    kids_of: dict[int, list[int]] = {}
    roots: list[int] = []
    for num, body in objects.items():
        head, _ = _split_object(body)
        if re.search(rb"/Type\s*/Pages\b", head):
            m = re.search(rb"/Kids\s*\[(.*?)\]", head, re.S)
            if m:
                kids_of[num] = [int(g) for g in _REF_RE.findall(m.group(1))]
            if not re.search(rb"/Parent\b", head):
                roots.append(num)
    ordered: list[int] = []
    seen: set[int] = set()

    def walk(num: int) -> None:
        if num in seen:
            return
        seen.add(num)
        for kid in kids_of.get(num, []):
            if kid in kids_of:
                walk(kid)
            elif kid in page_ids:
                ordered.append(kid)

    for root in sorted(roots):
        walk(root)
    remaining = [p for p in page_ids if p not in ordered]
    return ordered + remaining


def read_pdf(raw: bytes) -> tuple[PdfPage, ...]:
    if b"%PDF-" not in raw[:1024]:
        raise PdfParseError("missing PDF header")
    objects: dict[int, bytes] = {}
    for m in _OBJ_RE.finditer(raw):
        objects[int(m.group(1))] = m.group(2)
    if not objects:
        raise PdfParseError("no objects found")

    images: dict[int, PdfImage] = {}
    for num, body in objects.items():
        head, payload = _split_object(body)
        if payload is None or not re.search(rb"/Subtype\s*/Image\b", head):
            continue
        names = _filter_names(head)
        data = _decode_stream(head, payload)
        filt = "DCTDecode" if b"DCTDecode" in names else "raw"
        images[num] = PdfImage(
            width=_int_after(rb"/Width", head),
            height=_int_after(rb"/Height", head),
            filter=filt,
            color_space=_name_after(rb"/ColorSpace", head),
            bits=_int_after(rb"/BitsPerComponent", head) or 8,
            data=data,
        )

    page_ids = []
    page_heads: dict[int, bytes] = {}
    for num, body in objects.items():
        head, _ = _split_object(body)
        if re.search(rb"/Type\s*/Page(?![a-zA-Z])", head):
            page_ids.append(num)
            page_heads[num] = head
    if not page_ids:
        raise PdfParseError("no pages found")

    pages: list[PdfPage] = []
    for num in _page_order(objects, page_ids):
        head = page_heads[num]
        texts: list[str] = []
        m = re.search(rb"/Contents\s*(\[.*?\]|\d+\s+\d+\s+R)", head, re.S)
        content_ids = [int(g) for g in _REF_RE.findall(m.group(1))] if m else []
        for cid in content_ids:
            if cid not in objects:
                continue
            chead, cpayload = _split_object(objects[cid])
            if cpayload is None:
                continue
            text = _shown_text(_decode_stream(chead, cpayload))
            if text:
                texts.append(text)
        resources = head
        rref = re.search(rb"/Resources\s+(\d+)\s+\d+\s+R", head)
        if rref and int(rref.group(1)) in objects:
            resources, _ = _split_object(objects[int(rref.group(1))])
        page_images: list[PdfImage] = []
        xm = re.search(rb"/XObject\s*<<(.*?)>>", resources, re.S)
        if xm:
            for ref in _REF_RE.findall(xm.group(1)):
                img = images.get(int(ref))
                if img is not None:
                    page_images.append(img)
        pages.append(PdfPage(text=" ".join(texts), images=tuple(page_images)))
    return tuple(pages)
