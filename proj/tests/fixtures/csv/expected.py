"""Writes rfc4180_expected.json: the rows of rfc4180.csv as parsed by
Python's csv module (an independent RFC 4180 reader)."""
import csv
import json
import pathlib

here = pathlib.Path(__file__).parent
with open(here / "rfc4180.csv", newline="", encoding="utf-8") as f:
    rows = list(csv.reader(f))
(here / "rfc4180_expected.json").write_text(json.dumps(rows, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
