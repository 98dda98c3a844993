#!/usr/bin/env python3

# Define function ...
def readCsv(
    fname,
    columns,
    /,
    *,
    optional = (),
):
    """Read a CSV file as text and check its header

    Parameters
    ----------
    fname : str
        the name of the CSV file
    columns : tuple of str
        the columns that must be present
    optional : tuple of str, optional
        the columns that may be present

    Returns
    -------
    df : pandas.DataFrame
        the rows (every cell is a string)
    """

    # Import special modules ...
    try:
        import pandas
    except:
        raise Exception("\"pandas\" is not installed; run \"pip install --user pandas\"") from None

    # **************************************************************************

    # Load the file ...
    try:
        df = pandas.read_csv(
            fname,
            dtype = str,
            keep_default_na = False,
            skipinitialspace = True,
        )
    except pandas.errors.EmptyDataError:
        raise ValueError(f"\"{fname}\" is empty, there is no scenario to simulate") from None
    except pandas.errors.ParserError as err:
        raise ValueError(f"\"{fname}\" is malformed: {err}") from None

    # Check the header ...
    missing = [column for column in columns if column not in df.columns]
    if missing:
        raise ValueError(f"\"{fname}\" is missing the column(s) {', '.join(missing)}") from None
    extra = [column for column in df.columns if column not in columns and column not in optional]
    if extra:
        raise ValueError(f"\"{fname}\" has the unknown column(s) {', '.join(extra)}") from None
    if df.empty:
        raise ValueError(f"\"{fname}\" has no rows, there is no scenario to simulate") from None

    # Return answer ...
    return df
