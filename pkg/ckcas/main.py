"""
Main entry point for ckcas.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from ckcas.cli.commands import COMMANDS, run_command
from ckcas.core.config import VALID_FORMATS, VALID_LOG_LEVELS, CkcasConfig
from ckcas.core.exceptions import CkcasError, ConfigurationError, OutputError, VerificationError
from ckcas.core.logging_config import get_logger, setup_logging
from ckcas.file_handlers.output_writer import OutputWriter


EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFICATION = 3


def create_argument_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser."""
    parser = argparse.ArgumentParser(
        prog="ckcas",
        description="ckcas - Casimir invariants of the Cayley-Klein algebras so_{ω1..ωN}(N+1)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ckcas generate --n 4 --omega k,-1/c2,1,1 --format latex
  ckcas verify --n 5 --omega symbolic
  ckcas contract --name anti-desitter --n 4 --set c=inf
  ckcas rank --name flag --n 5
  ckcas table1
        """,
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="Dimension parameter N of so(N+1)")
    common.add_argument("--omega", type=str, help="Comma separated ω list, 'symbolic', or k,-1/c2,... tokens")
    common.add_argument("--name", type=str, help="Registry name, e.g. poincare or so(3,2)")
    common.add_argument("--format", choices=VALID_FORMATS, help="Output format (default from configuration)")
    common.add_argument("--set", type=str, help="Assignments VAR=VALUE,... with VAR in k, c, w<a>")
    common.add_argument("--seed", type=int, help="Seed of the randomized checks")
    common.add_argument("--out", type=str, help="Write to this file (relative to the output directory)")
    common.add_argument("--config", "-c", type=str, default="config/default.yaml", help="Path to configuration file")
    common.add_argument("--log-level", choices=VALID_LOG_LEVELS, help="Logging level")

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    helps = {
        'generate': "Generate the complete set of Casimirs",
        'verify': "Check that every Casimir is central",
        'contract': "Substitute --set values and re-render the Casimirs",
        'rank': "Randomized rank of M_g and the invariant count",
        'gelfand-check': "Run the Gel'fand cross-checks",
        'table1': "Casimirs of the six 3+1 kinematical algebras",
        'catalog': "List the named algebras",
    }
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common], help=helps[command])
    return parser


def load_configuration(config_path: str) -> CkcasConfig:
    """Load and validate configuration; a missing file gives the defaults."""
    try:
        config = CkcasConfig.load_from_file(config_path) if Path(config_path).exists() else CkcasConfig()
        config.validate()
        return config
    except ConfigurationError:
        raise
    except Exception as e:
        raise ConfigurationError("Failed to load configuration", str(e))


def emit(content: str, args, config: CkcasConfig):
    """Print the artifact, or write it through OutputWriter when --out is given."""
    if not args.out:
        sys.stdout.write(content)
        return
    writer = OutputWriter(config.output_directory, encoding=config.output_encoding)
    file_format = args.format or config.default_format
    if not writer.write_file(content, args.out, file_format):
        raise OutputError("Failed to write output", args.out)
    get_logger(__name__).info("Output written to %s", writer.resolve(args.out, file_format))


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; exits with 0, 2 (usage) or 3 (verification failure)."""
    parser = create_argument_parser()
    args = parser.parse_args(argv)

    try:
        config = load_configuration(args.config)
        if args.log_level:
            config.log_level = args.log_level
        logger = setup_logging(log_level=config.log_level, log_file=config.log_file)
        logger.debug("Configuration loaded from: %s", args.config)

        emit(run_command(args, config), args, config)
        code = EXIT_OK

    except VerificationError as e:
        get_logger().error("Verification failed: %s", e)
        sys.stderr.write(json.dumps({'error': str(e), 'witness': e.witness}, ensure_ascii=False, default=str) + "\n")
        code = EXIT_VERIFICATION
    except CkcasError as e:
        get_logger().error("ckcas error: %s", e)
        sys.stderr.write(json.dumps({'error': str(e)}, ensure_ascii=False) + "\n")
        code = EXIT_USAGE

    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
