#!/usr/bin/env python3

# Define function ...
def privacyDemo(
    config,
    /,
    *,
    outDir = None,
):
    """Run a scenario with and without privacy routing

    Parameters
    ----------
    config : dict
        the configuration (its "privacy_enabled" flag is ignored)
    outDir : str, optional
        the directory to write "privacy_pre.csv", "privacy_post.csv" and
        "privacy_metrics.csv" to

    Returns
    -------
    demo : dict
        the public view and anonymity metrics of both runs plus their trades
    """

    # Import standard modules ...
    import os

    # Import my modules ...
    from ..privacy import anonymityMetrics, exportPublicView
    from .runScenario import runScenario
    from .writeRows import writeRows

    # **************************************************************************

    # Run the scenario both ways ...
    runs = {}
    for mode, enabled in (("pre", False), ("post", True)):
        print(f"Running the scenario with privacy routing {'enabled' if enabled else 'disabled'} ...")
        runs[mode] = runScenario(config | {"privacy_enabled" : enabled})

    # Collect the results ...
    demo = {}
    for mode, results in runs.items():
        demo[mode] = {
               "view" : results["publicView"],
            "metrics" : anonymityMetrics(results["publicView"]),
             "trades" : results["trades"],
        }

    # Write the outputs (if needed) ...
    if outDir is not None:
        os.makedirs(outDir, exist_ok = True)
        for mode in ("pre", "post"):
            exportPublicView(demo[mode]["view"], os.path.join(outDir, f"privacy_{mode}.csv"))
        writeRows(
            [
                {
                            "mode" : mode,
                          "stddev" : demo[mode]["metrics"]["stddev"],
                       "top_share" : demo[mode]["metrics"]["topShare"],
                   "account_count" : demo[mode]["metrics"]["accountCount"],
                }
                for mode in ("pre", "post")
            ],
            os.path.join(outDir, "privacy_metrics.csv"),
            ["mode", "stddev", "top_share", "account_count"],
        )

    # Return answer ...
    return demo
