#!/usr/bin/env python3

# Define function ...
def cli(
    argv = None,
    /,
):
    """Run the command line interface

    Parameters
    ----------
    argv : list of str, optional
        the arguments (without the program name); defaults to "sys.argv[1:]"

    Returns
    -------
    status : int
        the exit status
    """

    # Import standard modules ...
    import argparse
    import sys

    # Import sub-functions ...
    from .compareConsensus import compareConsensus
    from .loadConfig import loadConfig
    from .plotData import plotData
    from .privacyDemo import privacyDemo
    from .runScenario import runScenario

    # **************************************************************************

    # Create argument parser ...
    parser = argparse.ArgumentParser(
           allow_abbrev = False,
            description = "Simulate a renewable energy certificate market that is settled on a DAG ledger.",
        formatter_class = argparse.ArgumentDefaultsHelpFormatter,
                   prog = "recsim",
    )
    subparsers = parser.add_subparsers(
            dest = "command",
        required = True,
    )

    # Add the "run" command ...
    run = subparsers.add_parser(
        "run",
           allow_abbrev = False,
        formatter_class = argparse.ArgumentDefaultsHelpFormatter,
                   help = "run a scenario",
    )
    run.add_argument(
        "--config",
        required = True,
            help = "the scenario configuration file",
            type = str,
    )
    run.add_argument(
        "--debug",
        action = "store_true",
          help = "re-check the invariants after every mutation",
    )
    run.add_argument(
        "--out",
        default = "out",
           help = "the output directory",
           type = str,
    )
    run.add_argument(
        "--seed",
        default = None,
           help = "the seed (overrides the configuration file and \"RECSIM_SEED\")",
           type = int,
    )

    # Add the "compare-consensus" command ...
    compare = subparsers.add_parser(
        "compare-consensus",
           allow_abbrev = False,
        formatter_class = argparse.ArgumentDefaultsHelpFormatter,
                   help = "compare the transaction time and energy of every consensus kind",
    )
    compare.add_argument(
        "--green-ratios",
        default = "0.3,0.6,0.9",
           dest = "greenRatios",
           help = "the comma-separated green ratio targets",
           type = str,
    )
    compare.add_argument(
        "--jitter",
        default = 0.0,
           help = "the sigma of the log-normal noise on each time",
           type = float,
    )
    compare.add_argument(
        "--ledger-sizes",
        default = "100,1000,10000",
           dest = "ledgerSizes",
           help = "the comma-separated ledger sizes (in blocks)",
           type = str,
    )
    compare.add_argument(
        "--out",
        default = "out",
           help = "the output directory",
           type = str,
    )
    compare.add_argument(
        "--seed",
        default = 0,
           help = "the base seed",
           type = int,
    )

    # Add the "privacy-demo" command ...
    privacy = subparsers.add_parser(
        "privacy-demo",
           allow_abbrev = False,
        formatter_class = argparse.ArgumentDefaultsHelpFormatter,
                   help = "run a scenario with and without privacy routing",
    )
    privacy.add_argument(
        "--config",
        required = True,
            help = "the scenario configuration file",
            type = str,
    )
    privacy.add_argument(
        "--out",
        default = "out",
           help = "the output directory",
           type = str,
    )

    # Add the "plot-data" command ...
    plot = subparsers.add_parser(
        "plot-data",
           allow_abbrev = False,
        formatter_class = argparse.ArgumentDefaultsHelpFormatter,
                   help = "write the plot-ready CSV file(s) of a figure",
    )
    plot.add_argument(
        "variant",
        choices = ("prices", "energy", "verifications", "privacy"),
           help = "the figure",
           type = str,
    )
    plot.add_argument(
        "--config",
        default = None,
           help = "the scenario configuration file (for \"prices\" and \"privacy\")",
           type = str,
    )
    plot.add_argument(
        "--out",
        default = "out",
           help = "the output directory",
           type = str,
    )
    plot.add_argument(
        "--seed",
        default = 0,
           help = "the base seed (for \"verifications\")",
           type = int,
    )

    # **************************************************************************

    # Parse the arguments ...
    # NOTE: "argparse" exits on errors (and on "--help"), which is turned into
    #       an exit status here.
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as err:
        return 0 if err.code is None else int(err.code)

    # Run the command ...
    try:
        if args.command == "run":
            config = loadConfig(
                args.config,
                overrides = None if args.seed is None else {"seed" : args.seed},
            )
            runScenario(config, debug = args.debug, outDir = args.out)
        elif args.command == "compare-consensus":
            compareConsensus(
                greenRatios = tuple(float(val) for val in args.greenRatios.split(",")),
                     jitter = args.jitter,
                ledgerSizes = tuple(int(val) for val in args.ledgerSizes.split(",")),
                     outDir = args.out,
                       seed = args.seed,
            )
        elif args.command == "privacy-demo":
            privacyDemo(loadConfig(args.config), outDir = args.out)
        else:
            plotData(
                args.variant,
                args.out,
                config = None if args.config is None else loadConfig(args.config),
                  seed = args.seed,
            )
    except (FileNotFoundError, KeyError, RuntimeError, ValueError, ZeroDivisionError) as err:
        print(f"ERROR: {err}", file = sys.stderr)
        return 1

    # Return answer ...
    return 0
