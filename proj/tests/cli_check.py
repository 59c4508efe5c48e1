"""Runs the bisphere CLI and checks exit code, output shape and determinism."""
import argparse
import csv
import io
import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run(cmd):
    with tempfile.TemporaryDirectory() as d:
        out = Path(d) / "out"
        proc = subprocess.run(cmd + ["--out", str(out)], capture_output=True, text=True)
        text = out.read_text() if out.exists() else ""
    return proc, text


def check_reports(doc, schema_path):
    import jsonschema

    jsonschema.validate(doc, json.loads(Path(schema_path).read_text()))
    reports = doc["reports"] if "reports" in doc else [doc]
    anchors = {}
    for r in reports:
        for c in r["checks"]:
            if anchors.setdefault(c["id"], c["paper_anchor"]) != c["paper_anchor"]:
                sys.exit(f"id {c['id']} maps to two anchors")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--exe", required=True)
    ap.add_argument("--expect", type=int, required=True)
    ap.add_argument("--schema")
    ap.add_argument("--csv-header")
    ap.add_argument("--deterministic", action="store_true")
    ap.add_argument("args", nargs=argparse.REMAINDER)
    a = ap.parse_args()
    cmd = [a.exe] + [x for x in a.args if x != "--"]

    proc, text = run(cmd)
    if proc.returncode != a.expect:
        sys.exit(f"exit {proc.returncode}, expected {a.expect}\n{proc.stderr}")
    if a.expect == 2 and "error" not in proc.stderr:
        sys.exit("usage error without a message")
    if a.schema:
        check_reports(json.loads(text), a.schema)
    if a.csv_header:
        rows = list(csv.reader(io.StringIO(text)))
        if rows[0] != a.csv_header.split(","):
            sys.exit(f"csv header {rows[0]}")
        if any(len(r) != len(rows[0]) for r in rows):
            sys.exit("ragged csv")
    if a.deterministic:
        _, again = run(cmd)
        if again != text:
            sys.exit("output differs between identical runs")
    print("ok")


if __name__ == "__main__":
    main()
