"""Corpus walk: statuses, caption fallback, per-file resilience."""

import pytest

from fatcat_adapter.errors import InputError
from fatcat_adapter.extract import extract_corpus

from adapter_helpers import make_image_pdf, make_text_pdf, solid_image


def test_bundled_corpus_statuses(toycorpus):
    manifest, texts = extract_corpus(toycorpus)
    status = {r.path: r.extraction_status for r in manifest.records}
    assert status == {
        "notes/alpha.txt": "ok",
        "notes/beta.txt": "ok",
        "reports/blank.dat": "skipped",
        "reports/delta.md": "ok",
        "reports/epsilon.pdf": "ok",
        "reports/gamma.txt": "ok",
    }
    assert len(texts) == 5
    assert "Boiler room log" in texts["reports/epsilon.pdf"]


def test_manifest_counts_and_dict(toycorpus):
    manifest, _ = extract_corpus(toycorpus)
    counts = manifest.counts()
    assert counts == {"ok": 5, "captioned": 0, "skipped": 1, "error": 0}
    d = manifest.to_dict()
    assert d["counts"] == counts
    assert [f["path"] for f in d["files"]] == sorted(f["path"] for f in d["files"])


def test_plain_text_file_is_ok(tmp_path):
    (tmp_path / "a.txt").write_text("some words here")
    manifest, texts = extract_corpus(tmp_path)
    assert manifest.records[0].extraction_status == "ok"
    assert manifest.records[0].kind == "text"
    assert texts["a.txt"] == "some words here"


def test_zero_byte_file_is_skipped(tmp_path):
    (tmp_path / "empty.txt").write_bytes(b"")
    manifest, texts = extract_corpus(tmp_path)
    assert manifest.records[0].extraction_status == "skipped"
    assert texts == {}


def test_image_only_pdf_page_is_captioned(tmp_path):
    (tmp_path / "scan.pdf").write_bytes(make_image_pdf(color=(220, 30, 30)))
    manifest, texts = extract_corpus(tmp_path)
    assert manifest.records[0].extraction_status == "captioned"
    assert "64 by 64 pixels" in texts["scan.pdf"]
    assert "red" in texts["scan.pdf"]


def test_captions_merge_in_page_order(tmp_path):
    raw = make_image_pdf(color=(30, 60, 220), text_first_page="intro words first")
    (tmp_path / "mixed.pdf").write_bytes(raw)
    manifest, texts = extract_corpus(tmp_path)
    assert manifest.records[0].extraction_status == "captioned"
    first, second = texts["mixed.pdf"].split("\n")
    assert "intro words first" in first
    assert "pixels" in second


def test_standalone_image_is_captioned(tmp_path):
    (tmp_path / "photo.jpg").write_bytes(solid_image((40, 160, 60)))
    manifest, texts = extract_corpus(tmp_path)
    record = manifest.records[0]
    assert record.kind == "image"
    assert record.extraction_status == "captioned"
    assert "green" in texts["photo.jpg"]


def test_malformed_pdf_is_skipped_not_fatal(tmp_path):
    (tmp_path / "broken.pdf").write_bytes(b"%PDF-1.4 garbage")
    (tmp_path / "fine.txt").write_text("still extracted")
    manifest, texts = extract_corpus(tmp_path)
    status = {r.path: r.extraction_status for r in manifest.records}
    assert status == {"broken.pdf": "skipped", "fine.txt": "ok"}
    assert list(texts) == ["fine.txt"]


def test_undecodable_binary_is_skipped(tmp_path):
    (tmp_path / "blob.bin").write_bytes(bytes(range(256)))
    manifest, texts = extract_corpus(tmp_path)
    assert manifest.records[0].kind == "other"
    assert manifest.records[0].extraction_status == "skipped"


def test_text_pdf_stays_ok(tmp_path):
    (tmp_path / "doc.pdf").write_bytes(make_text_pdf(["report body text"]))
    manifest, texts = extract_corpus(tmp_path)
    assert manifest.records[0].extraction_status == "ok"
    assert "report body text" in texts["doc.pdf"]


def test_unreadable_root_raises():
    with pytest.raises(InputError, match="root"):
        extract_corpus("/no/such/dir/anywhere")


def test_paths_are_relative_posix(tmp_path):
    sub = tmp_path / "deep" / "deeper"
    sub.mkdir(parents=True)
    (sub / "x.txt").write_text("content here")
    manifest, texts = extract_corpus(tmp_path)
    assert manifest.records[0].path == "deep/deeper/x.txt"
    assert list(texts) == ["deep/deeper/x.txt"]
