#!/usr/bin/env python3
"""Download UCR archive datasets and merge TRAIN+TEST into single text files.

Usage:
    python3 tools/fetch_ucr.py [--dest data/ucr] [NAME ...]

Defaults to Coffee, Beef, and OliveOil (the small sets the acceptance
benchmarks look for). Requires network access to timeseriesclassification.com.
Each output file is UCR text format: one series per line, class label first,
tab-separated, TRAIN rows followed by TEST rows.
"""

import argparse
import io
import pathlib
import sys
import urllib.request
import zipfile

BASE = "https://www.timeseriesclassification.com/aeon-toolkit/{name}.zip"
DEFAULT_NAMES = ["Coffee", "Beef", "OliveOil"]


def fetch(name: str, dest: pathlib.Path) -> pathlib.Path:
    url = BASE.format(name=name)
    print(f"downloading {url}")
    with urllib.request.urlopen(url, timeout=120) as resp:
        payload = resp.read()
    archive = zipfile.ZipFile(io.BytesIO(payload))

    rows = []
    for split in ("TRAIN", "TEST"):
        member = None
        for candidate in (f"{name}_{split}.txt", f"{name}/{name}_{split}.txt"):
            if candidate in archive.namelist():
                member = candidate
                break
        if member is None:
            raise FileNotFoundError(f"{name}_{split}.txt not found in {url}")
        text = archive.read(member).decode("utf-8")
        for line in text.splitlines():
            line = line.strip()
            if line:
                rows.append("\t".join(line.split(",")) if "," in line else line)

    out = dest / f"{name}.txt"
    out.write_text("\n".join(rows) + "\n")
    print(f"wrote {out} ({len(rows)} series)")
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", default=DEFAULT_NAMES)
    parser.add_argument("--dest", default="data/ucr", type=pathlib.Path)
    args = parser.parse_args()

    args.dest.mkdir(parents=True, exist_ok=True)
    failures = []
    for name in args.names:
        try:
            fetch(name, args.dest)
        except Exception as exc:  # noqa: BLE001 - report and continue
            print(f"failed to fetch {name}: {exc}", file=sys.stderr)
            failures.append(name)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
