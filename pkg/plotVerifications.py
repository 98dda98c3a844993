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
            description = "Plot how many validations each node performs under each consensus kind.",
        formatter_class = argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "csv",
        help = "the \"verifications.csv\" file made by \"run.py plot-data verifications\"",
        type = str,
    )
    args = parser.parse_args()

    # Load data ...
    df = pandas.read_csv(args.csv)

    # **************************************************************************

    # Create figure ...
    fg = matplotlib.pyplot.figure()

    # Loop over consensus kinds ...
    for i, (kind, group) in enumerate(df.groupby("consensus_kind", sort = False)):
        # Create axis ...
        ax = fg.add_subplot(2, 2, i + 1)

        # Plot data ...
        ax.bar(
            group["node"],
            group["validations"],
            color = f"C{i:d}",
        )

        # Configure axis ...
        ax.grid()
        ax.set_title(f"{kind} (σ = {group['validations'].std(ddof = 0):.1f})")
        ax.set_xlabel("Node [#]")
        ax.set_ylabel("Validations [#]")

    # Configure figure ...
    fg.tight_layout()

    # Save figure ...
    fname = f"{os.path.splitext(args.csv)[0]}.png"
    print(f"Making \"{fname}\" ...")
    fg.savefig(fname)
    matplotlib.pyplot.close(fg)
