#!/usr/bin/env python3

# Define function ...
def exportPublicView(
    view,
    fname,
    /,
):
    """Write the public view to a CSV file

    The "kind" column is kept for analysis only; a production view would omit
    it.

    Parameters
    ----------
    view : list of dict
        the public view
    fname : str
        the name of the CSV file
    """

    # Import special modules ...
    try:
        import pandas
    except:
        raise Exception("\"pandas\" is not installed; run \"pip install --user pandas\"") from None

    # **************************************************************************

    # Make the table ...
    df = pandas.DataFrame(view, columns = ["accountId", "kind", "totalVolume"]).rename(
        columns = {
              "accountId" : "account_id",
                   "kind" : "kind",
            "totalVolume" : "total_volume",
        }
    )

    # Write CSV ...
    print(f"Making \"{fname}\" ...")
    df.to_csv(
        fname,
              encoding = "utf-8",
                 index = False,
        lineterminator = "\n",
    )
