#!/usr/bin/env python3

# Define function ...
def writeRows(
    rows,
    fname,
    columns,
    /,
):
    """Write rows to a CSV file with a fixed number format

    Floats are written with 9 significant figures, None is written as an empty
    cell and booleans are written as 0/1.

    Parameters
    ----------
    rows : list of dict
        the rows
    fname : str
        the name of the CSV file
    columns : list of str
        the columns, in order
    """

    # Import special modules ...
    try:
        import pandas
    except:
        raise Exception("\"pandas\" is not installed; run \"pip install --user pandas\"") from None

    # **************************************************************************

    # Make the table ...
    df = pandas.DataFrame(rows, columns = columns)
    for column in df.select_dtypes(include = "bool").columns:
        df[column] = df[column].astype("int64")

    # Write CSV ...
    print(f"Making \"{fname}\" ...")
    df.to_csv(
        fname,
              encoding = "utf-8",
          float_format = "%.9g",
                 index = False,
        lineterminator = "\n",
                na_rep = "",
    )
