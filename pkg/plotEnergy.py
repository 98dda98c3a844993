#!/usr/bin/env python3

# Use the proper idiom in the main module ...
# NOTE: See https://docs.python.org/3.12/library/multiprocessing.html#the-spawn-and-forkserver-start-methods
if __name__ == "__main__":
    # Import standard modules ...
    import argparse
    import os

    # Import special modules ...
    try:
        import matplotlib
        matplotlib.rcParams.update(
            {
                       "backend" : "Agg",                                       # NOTE: See https://matplotlib.org/stable/gallery/user_interfaces/canvasagg.html
                    "figure.dpi" : 300,
                "figure.figsize" : (9.6, 7.2),
                     "font.size" : 8,
            }
        )
        import matplotlib.pyplot
    except:
        raise Exception("\"matplotlib\" is not installed; run \"pip install --user matplotlib\"") from None
    try:
        import pandas
    except:
        raise Exception("\"pandas\" is not installed; run \"pip install --user pandas\"") from None

    # **************************************************************************

    # Create argument parser and parse the arguments ...
    parser = argparse.ArgumentParser(
           allow_abbrev = False,
            description = "Plot the energy per transaction of each consensus kind against the size of the ledger.",
        formatter_class = argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "csv",
        help = "the \"energy.csv\" file made by \"run.py plot-data energy\"",
        type = str,
    )
    args = parser.parse_args()

    # Load data ...
    df = pandas.read_csv(args.csv)

    # **************************************************************************

    # Create figure ...
    fg = matplotlib.pyplot.figure()

    # Create axis ...
    ax = fg.add_subplot()

    # Loop over consensus kinds ...
    for colour, (kind, group) in enumerate(df.groupby("consensus_kind", sort = False)):
        # Plot data ...
        ax.plot(
            group["ledger_size"],
            group["energy_units"],
            color = f"C{colour:d}",
            label = kind,
           marker = "o",
        )

    # Configure axis ...
    ax.grid()
    ax.legend(loc = "upper left")
    ax.set_xlabel("Ledger Size [blocks]")
    ax.set_xscale("log")
    ax.set_ylabel("Energy Per Transaction [arbitrary units]")
    ax.set_yscale("log")

    # Configure figure ...
    fg.tight_layout()

    # Save figure ...
    fname = f"{os.path.splitext(args.csv)[0]}.png"
    print(f"Making \"{fname}\" ...")
    fg.savefig(fname)
    matplotlib.pyplot.close(fg)
