"""Walk a corpus tree and produce text per file plus a status manifest.

Per-file problems downgrade the file's status; they never abort the
walk.  Only an unusable root is fatal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .captioning import BasicImageCaptioner, Captioner
from .errors import AdapterError, InputError, PdfParseError
from .pdftext import read_pdf

logger = logging.getLogger(__name__)

KIND_BY_EXT = {
    ".txt": "text",
    ".md": "text",
    ".rst": "text",
    ".pdf": "pdf",
    ".png": "image",
    ".jpg": "image",
    ".jpeg": "image",
    ".gif": "image",
    ".bmp": "image",
}

STATUSES = ("ok", "captioned", "skipped", "error")


@dataclass(frozen=True)
class FileRecord:
    path: str  # relative to the corpus root, POSIX separators
    kind: str  # text | pdf | image | other
    extraction_status: str  # ok | captioned | skipped | error

    def to_dict(self) -> dict:
        return {
            "path": self.path,
            "kind": self.kind,
            "extraction_status": self.extraction_status,
        }


@dataclass(frozen=True)
class CorpusManifest:
    root: str
    records: tuple[FileRecord, ...] = field(default=())

    def counts(self) -> dict[str, int]:
        out = {status: 0 for status in STATUSES}
        for record in self.records:
            out[record.extraction_status] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "root": self.root,
            "files": [r.to_dict() for r in self.records],
            "counts": self.counts(),
        }


def _decode_text(raw: bytes) -> str | None:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError:
        return None


def _extract_pdf(raw: bytes, captioner: Captioner, rel: str) -> tuple[str, str]:
    """Return (text, status) for a parsed PDF, captioning textless pages."""
    pages = read_pdf(raw)
    page_texts: list[str] = []
    used_captions = False
    for page in pages:
        if page.text.strip():
            page_texts.append(page.text.strip())
            continue
        captions = []
        for img in page.images:
            try:
                captions.append(captioner.caption(img, hint=rel))
            except AdapterError:
                continue
        if captions:
            used_captions = True
            # captions stand in for the page, merged in page order
            page_texts.append(" ".join(captions))
    text = "\n".join(page_texts)
    if not text.strip():
        return "", "skipped"
    return text, ("captioned" if used_captions else "ok")


def extract_corpus(
    root: str | Path, captioner: Captioner | None = None
) -> tuple[CorpusManifest, dict[str, str]]:
    """Extract text from every file under root.

    Returns the manifest (one record per file, statuses ok/captioned/
    skipped/error) and a mapping of relative path -> extracted text for
    the files that produced any.
    """
    root = Path(root)
    if not root.is_dir():
        raise InputError(f"unreadable corpus root: {root}")
    captioner = captioner or BasicImageCaptioner()
    records: list[FileRecord] = []
    texts: dict[str, str] = {}
    for path in sorted(p for p in root.rglob("*") if p.is_file()):
        rel = path.relative_to(root).as_posix()
        kind = KIND_BY_EXT.get(path.suffix.lower(), "other")
        try:
            raw = path.read_bytes()
        except OSError as exc:
            logger.warning("cannot read %s: %s", rel, exc)
            records.append(FileRecord(rel, kind, "error"))
            continue
        if not raw:
            records.append(FileRecord(rel, kind, "skipped"))
            continue
        status = "skipped"
        text = ""
        if kind in ("text", "other"):
            decoded = _decode_text(raw)
            if decoded and decoded.strip():
                text, status = decoded, "ok"
        elif kind == "pdf":
            try:
                text, status = _extract_pdf(raw, captioner, rel)
            except PdfParseError as exc:
                logger.warning("malformed PDF %s: %s", rel, exc)
                status = "skipped"
        elif kind == "image":
            try:
                text, status = captioner.caption(raw, hint=rel), "captioned"
            except AdapterError as exc:
                logger.warning("cannot caption %s: %s", rel, exc)
                status = "skipped"
        if status in ("ok", "captioned"):
            texts[rel] = text
        records.append(FileRecord(rel, kind, status))
    return CorpusManifest(root=str(root), records=tuple(records)), texts
