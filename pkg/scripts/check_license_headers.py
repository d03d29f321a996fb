#!/usr/bin/env python3
"""
License header checker for the QGEM Sim project.
Checks that Python and Bash sources start with the MIT header in docs/license-header.txt.

Usage: check_license_headers.py [DIRECTORY ...]   (default: src tests scripts)
"""

import sys
from pathlib import Path
from typing import Iterator, List

HEADER_FILE = Path(__file__).resolve().parent.parent / "docs" / "license-header.txt"
DEFAULT_DIRECTORIES = ["src", "tests", "scripts"]
SKIPPED_NAMES = {"__init__.py", "check_license_headers.py"}


def load_header() -> List[str]:
    return HEADER_FILE.read_text(encoding="utf-8").rstrip("\n").split("\n")


def source_files(directories: List[str]) -> Iterator[Path]:
    for directory in directories:
        root = Path(directory)
        if not root.exists():
            continue
        for pattern in ("*.py", "*.sh"):
            for path in sorted(root.rglob(pattern)):
                if path.name not in SKIPPED_NAMES:
                    yield path


def check_license_header(filepath: Path, header: List[str]) -> bool:
    """Check if a file has the license header, after an optional shebang."""
    try:
        lines = filepath.read_text(encoding="utf-8").split("\n")
    except (UnicodeDecodeError, OSError):
        return True

    start = 1 if lines and lines[0].startswith("#!") else 0
    # spacer lines ("" or "#") may follow a shebang
    while 0 < start < len(lines) and lines[start].strip() in ("", "#"):
        start += 1

    if lines[start:start + len(header)] == header:
        return True
    print(f"❌ {filepath}: Missing or incorrect license header")
    return False


def main(argv: List[str]) -> int:
    header = load_header()
    directories = argv or DEFAULT_DIRECTORIES
    failed = [path for path in source_files(directories) if not check_license_header(path, header)]

    if failed:
        print(f"\n💡 {len(failed)} file(s) need the header from {HEADER_FILE.name}")
        return 1
    print("✅ All Python and Bash files have proper license headers")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
