import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from alphatrace import enumerate_hypertrees, enumerate_linear_unicyclic


def corpus(k: int, max_m: int):
    """All hypertrees (m = 1..max_m) and linear unicyclic hypergraphs
    (m = 3..max_m) of one rank."""
    out = [h for m in range(1, max_m + 1) for h in enumerate_hypertrees(k, m)]
    out += [h for m in range(3, max_m + 1) for h in enumerate_linear_unicyclic(k, m)]
    return out
