#!/usr/bin/env python3

# Use the proper idiom in the main module ...
# NOTE: See https://docs.python.org/3.12/library/multiprocessing.html#the-spawn-and-forkserver-start-methods
if __name__ == "__main__":
    # Import standard modules ...
    import sys

    # Import my modules ...
    try:
        import recsim
    except:
        raise Exception("\"recsim\" is not installed; you need to have the \"recsim\" directory located somewhere in your $PYTHONPATH") from None

    # **************************************************************************

    # Run the command line interface ...
    sys.exit(recsim.sim.cli(sys.argv[1:]))
