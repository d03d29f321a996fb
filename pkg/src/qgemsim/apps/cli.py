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
QGEM Sim CLI Application
Command-line interface for phase surfaces, l-gamma maps, time series and thresholds
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from .. import __version__
from ..config import load_config, merge_options
from ..core import QGEM_Simulator
from ..exceptions import QGEM_Error
from ..models.quantum import Setup_Kind
from ..models.sweep import Measure_Kind, Run_Options, Sweep_Mode, Sweep_Result


# Subcommands that produce a result table, with the sweep mode they run.
TABLE_COMMANDS = {
    "point": Sweep_Mode.POINT,
    "phase-surface": Sweep_Mode.PHASE_SURFACE,
    "bipartitions": Sweep_Mode.PHASE_SURFACE,
    "lgamma-map": Sweep_Mode.LGAMMA_MAP,
    "time-series": Sweep_Mode.TIME_SERIES,
}


def _common_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand; all default to None so config values survive."""
    common = argparse.ArgumentParser(add_help=False)

    physics = common.add_argument_group("physical parameters")
    physics.add_argument("--setup", choices=[kind.value for kind in Setup_Kind],
                         help="Geometry of the three masses (default: parallel)")
    physics.add_argument("--mass", metavar="KG", help="Mass of each particle (default: 1e-14)")
    physics.add_argument("--dmin", metavar="M", help="Minimum instance distance (default: 35e-6)")
    physics.add_argument("--l", metavar="M", help="Superposition width (default: 10e-6)")
    physics.add_argument("--tau", metavar="S", help="Interaction time (default: 2.5)")
    physics.add_argument("--gamma", metavar="HZ", help="Decoherence rate (default: 0)")
    physics.add_argument("--separation", metavar="M",
                         help="Explicit neighbour distance d, overriding the setup rule")
    physics.add_argument("--unphysical-mode", action="store_true", default=None,
                         help="Evaluate phase formulas even for negative distances")

    phases = common.add_argument_group("phase override")
    phases.add_argument("--dphi2", metavar="RAD", help="Phase difference of the 2nd distinct phase")
    phases.add_argument("--dphi3", metavar="RAD", help="Phase difference of the 3rd distinct phase")
    phases.add_argument("--dphi4", metavar="RAD", help="Phase difference of the 4th distinct phase")

    run = common.add_argument_group("run options")
    run.add_argument("--measure", choices=[kind.value for kind in Measure_Kind],
                     help="Quantity to evaluate (default: witness)")
    run.add_argument("--grid", metavar="N[xM]", help="Grid points per axis")
    run.add_argument("--phi-range", metavar="MIN:MAX", help="Phase axis bounds (default: 0:2pi)")
    run.add_argument("--l-range", metavar="MIN:MAX", help="l axis bounds in m")
    run.add_argument("--gamma-range", metavar="MIN:MAX", help="gamma axis bounds in Hz")
    run.add_argument("--tau-range", metavar="MIN:MAX", help="tau axis bounds in s")
    run.add_argument("--log-gamma", action="store_true", default=None,
                     help="Space the gamma axis logarithmically")
    run.add_argument("--gammas", metavar="LIST", help="Comma-separated gamma values (time series)")
    run.add_argument("--jobs", metavar="N", help="Worker threads (default: 1)")
    run.add_argument("--config", metavar="PATH", help="YAML file with default option values")

    threshold = common.add_argument_group("threshold search")
    threshold.add_argument("--predicate", choices=["witness", "trineg"],
                           help="Detection criterion (default: witness)")
    threshold.add_argument("--gamma-hi", metavar="HZ", help="Upper bracket (default: 1.0)")
    threshold.add_argument("--masses", metavar="LIST", help="Comma-separated masses to scan")
    threshold.add_argument("--dmins", metavar="LIST", help="Comma-separated d_min values to scan")

    output = common.add_argument_group("output")
    output.add_argument("--out", metavar="PATH", help="Output file (default: print to stdout)")
    output.add_argument("--format", choices=["csv", "json"],
                        help="Output format (default: from the file extension, else csv)")
    output.add_argument("--eps", metavar="RAD", help="Angular tolerance for classify (default: 1e-9)")
    output.add_argument("-v", "--verbose", action="count", default=None,
                        help="More logging (-v info, -vv debug)")
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create command-line argument parser"""
    parser = argparse.ArgumentParser(
        prog="qgem-sim",
        description="Simulate gravitationally induced entanglement of three masses",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  qgem-sim point --setup star --gamma 0.01 --measure trineg
  qgem-sim phase-surface --measure trineg --gamma 0.2 --out surface.csv
  qgem-sim lgamma-map --setup linear --log-gamma --gamma-range 1e-4:0.2 --out map.json
  qgem-sim time-series --all-setups --gammas 0.001,0.01,0.1 --measure witness
  qgem-sim threshold --l 35e-6 --masses 1e-15,1e-14
  qgem-sim classify --dphi2 0.7 --dphi3 3.14159
        """
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = _common_options()
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    commands.add_parser("point", parents=[common], help="Evaluate one configuration")
    commands.add_parser("phase-surface", parents=[common],
                        help="Measure over the (dphi2, dphi3) plane")
    commands.add_parser("bipartitions", parents=[common],
                        help="neg-A, neg-B and neg-C over the (dphi2, dphi3) plane")
    commands.add_parser("lgamma-map", parents=[common],
                        help="Measure over superposition width and decoherence rate")
    series = commands.add_parser("time-series", parents=[common],
                                 help="Measure against interaction time")
    series.add_argument("--all-setups", action="store_true",
                        help="Include parallel, linear and star columns")
    commands.add_parser("threshold", parents=[common],
                        help="Largest decoherence rate with detection")
    commands.add_parser("classify", parents=[common],
                        help="Symbolic entanglement class of given phase differences")
    commands.add_parser("phases", parents=[common], help="Phases of a physical configuration")
    commands.add_parser("compare", parents=[common],
                        help="Witness of all three setups on a common l-gamma grid")
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def resolve_options(args: argparse.Namespace) -> Run_Options:
    """Defaults < --config file < explicit flags."""
    config = load_config(args.config) if args.config else {}
    flags = {name: getattr(args, name, None) for name in Run_Options.option_names()}
    return merge_options(Run_Options(), config, flags)


def emit(simulator: QGEM_Simulator, result: Sweep_Result, options: Run_Options) -> None:
    """Write the table to --out, or print it."""
    if options.out:
        written = simulator.write_result(result, options.out, options.format)
        print(f"✅ Wrote {result.row_count} rows to '{written}'", file=sys.stderr)
    else:
        sys.stdout.write(simulator.render_result(result, options.format or 'csv'))


def run_table(simulator: QGEM_Simulator, command: str, options: Run_Options,
              args: argparse.Namespace) -> Sweep_Result:
    mode = TABLE_COMMANDS[command]
    setups = tuple(Setup_Kind) if getattr(args, "all_setups", False) else None
    spec = simulator.build_spec(mode, options, setups=setups)
    if command == "bipartitions":
        return simulator.run_bipartition_surface(spec, options.jobs)
    return simulator.run_sweep(spec, options.jobs)


def _print_mapping(title: str, values: Dict[str, Any]) -> None:
    print(title)
    for key, value in values.items():
        print(f"  {key}: {value}")


def run_command(simulator: QGEM_Simulator, args: argparse.Namespace,
                options: Run_Options) -> None:
    command = args.command
    setup = simulator.setup_of(options)

    if command in TABLE_COMMANDS:
        emit(simulator, run_table(simulator, command, options, args), options)
    elif command == "threshold":
        emit(simulator, simulator.threshold_table(options), options)
    elif command == "classify":
        deltas = simulator.phase_override(options, setup)
        if deltas is None:
            deltas = tuple(simulator.phase_report(
                setup, simulator.params_from_options(options))['deltas'].values())
        verdict = simulator.classify(setup, deltas, options.eps)
        print(f"{verdict.state_class.value} ({verdict.condition})")
    elif command == "phases":
        report = simulator.phase_report(setup, simulator.params_from_options(options))
        print(f"Setup: {report['setup']}")
        _print_mapping("Distinct phases (rad):", report['distinct'])
        _print_mapping("Phase differences (rad):", report['deltas'])
        _print_mapping("Phase factors:", report['factors'])
    elif command == "compare":
        comparison = simulator.compare_setups(options, options.jobs)
        _print_mapping("Largest pairwise witness difference:", comparison.pairwise_max_difference)
        print(f"Dynamic range: {comparison.dynamic_range:.6g}")
        print(f"Nearly equivalent: {'yes' if comparison.near_equivalent else 'no'}")


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    parser = create_parser()
    args = parser.parse_args(argv)

    try:
        options = resolve_options(args)
        configure_logging(options.verbose)
        run_command(QGEM_Simulator(), args, options)
        return 0

    except KeyboardInterrupt:
        print("\n⏹️  Run cancelled by user", file=sys.stderr)
        return 1
    except QGEM_Error as e:
        print(f"❌ {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
