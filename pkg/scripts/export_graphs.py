#!/usr/bin/env python3
"""Export the exchange graphs of the built-in matrices as Graphviz files.

Usage: python scripts/export_graphs.py [OUTDIR] [NAME ...]

Writes one `<name>.dot` per built-in matrix (default: all finite types
into ./graphs).  Render with e.g. `dot -Tsvg graphs/b2.dot -o b2.svg`.
"""

import os
import sys

from valq import builtin_exchange_data
from valq.classical import enumerate_exchange_graph, graph_to_dot

DEFAULT_NAMES = ("A2", "B2", "C2", "G2", "A3", "B3")

def main(argv):
    outdir = argv[0] if argv else "graphs"
    names = [a.upper() for a in argv[1:]] or list(DEFAULT_NAMES)
    os.makedirs(outdir, exist_ok=True)
    for name in names:
        result = enumerate_exchange_graph(builtin_exchange_data(name))
        path = os.path.join(outdir, "%s.dot" % name.lower())
        with open(path, "w") as fh:
            fh.write(graph_to_dot(result))
        print(
            "%s: %d seeds, %d edges -> %s"
            % (name, result.count, len(result.edges), path)
        )
    return 0

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
