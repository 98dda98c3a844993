#!/usr/bin/env python3

# Define function ...
def loadConfig(
    fname,
    /,
    *,
    overrides = None,
):
    """Load a scenario configuration file

    The file is a flat list of "key = value" lines (lines starting with "#"
    are comments). Keys that are not given take their default values (see
    "defaultConfig()"), paths are relative to the file and the environment
    variable "RECSIM_SEED" (if set) replaces the seed.

    Parameters
    ----------
    fname : str
        the name of the configuration file
    overrides : dict, optional
        values that replace those in the file (before validation)

    Returns
    -------
    config : dict
        the configuration
    """

    # Import standard modules ...
    import configparser
    import os

    # Import my modules ...
    from .defaultConfig import defaultConfig

    # **************************************************************************

    # Check input ...
    if not os.path.exists(fname):
        raise FileNotFoundError(f"\"{fname}\" does not exist") from None

    # Load the file under a dummy section ...
    parser = configparser.ConfigParser(
        comment_prefixes = ("#",),
        inline_comment_prefixes = ("#",),
        interpolation = None,
    )
    with open(fname, "rt", encoding = "utf-8") as fObj:
        try:
            parser.read_string("[scenario]\n" + fObj.read(), source = fname)
        except configparser.Error as err:
            raise ValueError(f"\"{fname}\" is not a valid configuration file: {err}") from None

    # Convert the values to the types of the defaults ...
    config = defaultConfig()
    for key, raw in parser["scenario"].items():
        if key not in config:
            raise ValueError(f"\"{key}\" is not a configuration key (in \"{fname}\")") from None
        try:
            if isinstance(config[key], bool):
                config[key] = parser["scenario"].getboolean(key)
            elif isinstance(config[key], int):
                config[key] = int(raw)
            elif isinstance(config[key], float):
                config[key] = float(raw)
            else:
                config[key] = raw.strip()
        except ValueError:
            raise ValueError(f"\"{key}\" has an invalid value \"{raw}\" (in \"{fname}\")") from None

    # Apply the overrides ...
    if overrides is not None:
        config.update(overrides)
    if "RECSIM_SEED" in os.environ:
        try:
            config["seed"] = int(os.environ["RECSIM_SEED"])
        except ValueError:
            raise ValueError(f"\"RECSIM_SEED\" must be an integer (not \"{os.environ['RECSIM_SEED']}\")") from None

    # Resolve the paths ...
    dname = os.path.dirname(os.path.abspath(fname))
    for key in ("generation_csv", "demand_csv"):
        if not config[key]:
            raise ValueError(f"\"{key}\" is not set (in \"{fname}\")") from None
        config[key] = os.path.normpath(os.path.join(dname, config[key]))
        if not os.path.exists(config[key]):
            raise FileNotFoundError(f"\"{config[key]}\" does not exist (referenced by \"{fname}\")") from None

    # Check the values ...
    for key in ("n_suppliers", "n_consumers", "n_validators", "n_slots", "rounds", "quorum_size", "listing_depth", "conflict_every", "max_proxies"):
        if config[key] < 1:
            raise ValueError(f"\"{key}\" must be at least 1 (not {config[key]:d})") from None
    if config["n_slots"] > config["deadline_slots"]:
        raise ValueError(f"\"n_slots\" ({config['n_slots']:d}) must not be after the deadline ({config['deadline_slots']:d})") from None
    if config["quorum_size"] > config["n_validators"]:
        raise ValueError(f"\"quorum_size\" ({config['quorum_size']:d}) must not exceed \"n_validators\" ({config['n_validators']:d})") from None
    if config["consensus_kind"] not in ("pow", "prism", "pos", "fpc_rep"):
        raise ValueError(f"\"{config['consensus_kind']}\" is not a consensus kind") from None
    if config["sybil_reputation"] <= 0.0:
        raise ValueError(f"\"sybil_reputation\" must be positive (not {config['sybil_reputation']:g})") from None
    if not 0.0 <= config["green_target"] <= 1.0:
        raise ValueError(f"\"green_target\" must be in [0, 1] (not {config['green_target']:g})") from None
    if not 0.0 < config["price_min"] <= config["initial_price"] <= config["price_max"]:
        raise ValueError("the prices must satisfy 0 < price_min <= initial_price <= price_max") from None

    # Return answer ...
    return config
