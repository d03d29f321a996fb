#!/usr/bin/env python3
#
# Copyright (c) 2026 QGEM Sim Team
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
"""
Run the sample configurations in samples/configs and write their tables to outputs/
"""

import sys
from pathlib import Path

# Add the src directory to the path so we can import qgemsim
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from qgemsim.apps.cli import main as cli_main

# config file stem -> (subcommand, extra flags)
SAMPLES = {
    "ghz_surface": ("phase-surface", []),
    "linear_lgamma": ("lgamma-map", []),
    "time_series": ("time-series", ["--all-setups"]),
    "mass_threshold": ("threshold", []),
}


def main():
    """Run every sample; stop at the first failing one."""
    project_root = Path(__file__).parent.parent
    config_dir = project_root / "samples" / "configs"
    output_dir = project_root / "outputs"
    output_dir.mkdir(exist_ok=True)

    for stem, (command, extra) in SAMPLES.items():
        config = config_dir / f"{stem}.yaml"
        if not config.exists():
            print(f"Error: Sample config {config} not found!")
            return 1

        print(f"Running {command} with {config.name}...")
        code = cli_main([command, "--config", str(config),
                         "--out", str(output_dir / f"{stem}.csv"), *extra])
        if code != 0:
            print(f"Sample {stem} failed with exit code {code}")
            return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
