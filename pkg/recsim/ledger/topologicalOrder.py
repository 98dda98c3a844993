#!/usr/bin/env python3

# Define function ...
def topologicalOrder(
    ledger,
    /,
):
    """Sort the blocks of a ledger so that parents come before children

    This function uses Kahn's algorithm, which fails if (and only if) the
    approval graph has a cycle.

    Parameters
    ----------
    ledger : dict
        the ledger

    Returns
    -------
    order : list of str
        the identifiers of the blocks, parents first
    """

    # Import standard modules ...
    import collections

    # **************************************************************************

    # Count the distinct parents of every block ...
    nParents = {}
    children = collections.defaultdict(set)
    for block in ledger["blocks"].values():
        if block["blockId"] == ledger["genesis"]:
            nParents[block["blockId"]] = 0
            continue
        parents = {block["parentA"], block["parentB"]}
        nParents[block["blockId"]] = len(parents)
        for parent in parents:
            children[parent].add(block["blockId"])

    # Peel off blocks without remaining parents ...
    queue = collections.deque(sorted(blockId for blockId, n in nParents.items() if n == 0))
    order = []
    while queue:
        blockId = queue.popleft()
        order.append(blockId)
        for child in sorted(children[blockId]):
            nParents[child] -= 1
            if nParents[child] == 0:
                queue.append(child)

    # Check that every block was reached ...
    if len(order) != len(ledger["blocks"]):
        raise ValueError("the ledger contains a cycle") from None

    # Return answer ...
    return order
