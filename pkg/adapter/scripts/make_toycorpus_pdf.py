#!/usr/bin/env python3
"""Regenerate the bundled PDF document (deterministic reportlab output).

Usage: python3 adapter/scripts/make_toycorpus_pdf.py
"""

from pathlib import Path

from reportlab.lib.pagesizes import letter
from reportlab.pdfgen import canvas

LINES = [
    "Boiler room log, week nine.",
    "The feed pump ran hot on Tuesday; we cleaned the strainer and the",
    "temperature dropped back to normal. Steam pressure held at the set",
    "point all week. The condensate tank float valve sticks when the",
    "level falls fast, so the fitter shimmed the hinge and it cycles",
    "cleanly now. Burner two needed a new ignition electrode. Fuel",
    "consumption matches the forecast and the stack readings stayed",
    "inside the permit limits. No alarms after Wednesday night.",
]


def main() -> None:
    out = (
        Path(__file__).resolve().parents[1]
        / "src"
        / "fatcat_adapter"
        / "toycorpus"
        / "reports"
        / "epsilon.pdf"
    )
    out.parent.mkdir(parents=True, exist_ok=True)
    c = canvas.Canvas(str(out), pagesize=letter, invariant=1)
    y = 720
    for line in LINES:
        c.drawString(72, y, line)
        y -= 18
    c.showPage()
    c.save()
    print(f"wrote {out} ({out.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
