#!/usr/bin/env python3

# Import special modules ...
try:
    import pytest
except:
    raise Exception("\"pytest\" is not installed; run \"pip install --user pytest\"") from None

# Define fixture ...
@pytest.fixture(autouse = True)
def unseeded(monkeypatch):
    """Stop a "RECSIM_SEED" in the environment from leaking into the tests"""
    monkeypatch.delenv("RECSIM_SEED", raising = False)

# Define fixture ...
@pytest.fixture
def microScenario(tmp_path):
    """Write a two-supplier, three-consumer, ten-slot scenario

    The fixture is a function that takes configuration overrides as keyword
    arguments and returns the path of the configuration file.
    """

    # Write the data ...
    (tmp_path / "generation.csv").write_text(
        "period,source,energy_mwh\n"
        "2021-01,wind,2232.0\n"
        "2021-01,solar,1488.0\n",
        encoding = "utf-8",
    )
    (tmp_path / "demand.csv").write_text(
        "period,consumer_id,consumption_mwh,own_renewable_mwh\n"
        "2021-01,c01,1488.0,0.0\n"
        "2021-01,c02,2232.0,\n"
        "2021-01,c03,1116.0,372.0\n",
        encoding = "utf-8",
    )

    # Define function ...
    def write(**overrides):
        settings = {
            "generation_csv" : "generation.csv",
                "demand_csv" : "demand.csv",
               "n_suppliers" : 2,
               "n_consumers" : 3,
              "n_validators" : 30,
               "quorum_size" : 5,
                   "n_slots" : 10,
            "conflict_every" : 2,
                      "seed" : 7,
        }
        settings.update(overrides)
        fname = tmp_path / "micro.cfg"
        fname.write_text(
            "# micro-scenario\n" + "".join(f"{key} = {value}\n" for key, value in settings.items()),
            encoding = "utf-8",
        )
        return str(fname)

    # Return answer ...
    return write
