#!/usr/bin/env python3

# Define function ...
def makeParams(
    *,
                beta = 0.3,
    firstRoundBounds = (0.5, 1.0),
                 lam = 0.2,
        omegaInitial = 0.5,
          quorumSize = 20,
              rounds = 10,
):
    """Make the parameters of Fast Probabilistic Consensus

    Parameters
    ----------
    beta : float, optional
        the lower end of the range that each round's threshold margin is drawn
        from (it must be in (0, 0.5))
    firstRoundBounds : tuple of float, optional
        the bounds (a, b) of the first round's threshold
    lam : float, optional
        the reputation decay constant (per slot)
    omegaInitial : float, optional
        the system-defined threshold: the first round's threshold is drawn
        from (omegaInitial, b), so it must lie within the first round bounds
    quorumSize : int, optional
        the number of nodes queried in each round
    rounds : int, optional
        the maximum number of rounds

    Returns
    -------
    params : dict
        the parameters
    """

    # Check input ...
    a, b = firstRoundBounds
    if not 0.5 <= a <= b <= 1.0:
        raise ValueError(f"the first round bounds must satisfy 0.5 ≤ a ≤ b ≤ 1 (not ({a:g}, {b:g}))") from None
    if not 0.0 < beta < 0.5:
        raise ValueError(f"beta must be in (0, 0.5) (not {beta:g})") from None
    if lam < 0.0:
        raise ValueError(f"lambda must be non-negative (not {lam:g})") from None
    if not a <= omegaInitial <= b:
        raise ValueError(f"omega must be in [{a:g}, {b:g}] (not {omegaInitial:g})") from None
    if quorumSize < 1:
        raise ValueError(f"the quorum size must be positive (not {quorumSize:d})") from None
    if rounds < 1:
        raise ValueError(f"the number of rounds must be positive (not {rounds:d})") from None

    # Return answer ...
    return {
                    "beta" : float(beta),
        "firstRoundBounds" : (float(a), float(b)),
                  "lambda" : float(lam),
            "omegaInitial" : float(omegaInitial),
              "quorumSize" : int(quorumSize),
                  "rounds" : int(rounds),
    }
