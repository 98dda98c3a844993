#!/usr/bin/env python3

# Define function ...
def defaultConfig():
    """Return the default scenario configuration

    The defaults describe a market of 4 suppliers and 15 commercial building
    consumers validated by 100 nodes over one year of hourly slots.

    Returns
    -------
    config : dict
        the configuration, keyed by the names used in configuration files
    """

    # Import my modules ...
    from .. import SLOTS_PER_YEAR

    # Return answer ...
    return {
                "n_suppliers" : 4,
                "n_consumers" : 15,
               "n_validators" : 100,
                    "n_slots" : SLOTS_PER_YEAR,
             "deadline_slots" : SLOTS_PER_YEAR,
             "lifetime_slots" : SLOTS_PER_YEAR,
                     "lambda" : 0.2,
              "omega_initial" : 0.5,
            "first_round_low" : 0.5,
           "first_round_high" : 1.0,
                       "beta" : 0.3,
                     "rounds" : 10,
                "quorum_size" : 20,
               "weight_floor" : 0.001,
                      "gamma" : 10000.0,
               "green_target" : 0.6,
              "green_targets" : "",
              "initial_price" : 100.0,
                  "price_min" : 10.0,
                  "price_max" : 200.0,
        "scarcity_elasticity" : 0.5,
              "listing_depth" : 24,
                "q_max_share" : 0.2,
              "carry_surplus" : True,
             "initial_tokens" : 1.0e9,
                       "seed" : 0,
             "consensus_kind" : "fpc_rep",
            "privacy_enabled" : False,
            "activity_window" : 24,
                "max_proxies" : 5,
             "conflict_every" : 100,
           "sybil_reputation" : 1.0,
             "generation_csv" : "",
                 "demand_csv" : "",
    }
