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
            description = "Plot the public account volumes with and without privacy routing.",
        formatter_class = argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "pre",
        help = "the \"privacy_pre.csv\" file made by \"run.py privacy-demo\"",
        type = str,
    )
    parser.add_argument(
        "post",
        help = "the \"privacy_post.csv\" file made by \"run.py privacy-demo\"",
        type = str,
    )
    args = parser.parse_args()

    # **************************************************************************

    # Create figure ...
    fg = matplotlib.pyplot.figure()

    # Loop over views ...
    for i, (title, fname) in enumerate([("Without Privacy Routing", args.pre), ("With Privacy Routing", args.post)]):
        # Load data ...
        df = pandas.read_csv(fname).sort_values("total_volume", ascending = False)

        # Create axis ...
        ax = fg.add_subplot(2, 1, i + 1)

        # Plot data ...
        ax.bar(
            range(len(df)),
            df["total_volume"],
            color = f"C{i:d}",
        )

        # Configure axis ...
        ax.grid()
        ax.set_title(f"{title} ({len(df):d} accounts, σ = {df['total_volume'].std(ddof = 0):.1f})")
        ax.set_xlabel("Account (by volume) [#]")
        ax.set_ylabel("Volume [RECs]")

    # Configure figure ...
    fg.tight_layout()

    # Save figure ...
    fname = f"{os.path.splitext(args.post)[0]}.png"
    print(f"Making \"{fname}\" ...")
    fg.savefig(fname)
    matplotlib.pyplot.close(fg)
