"""Print the invariant table for every graph of the Heawood -> Coxeter -> Klein chain.

    python3 scripts/chain_report.py [--json]
"""

import argparse
import json
import time

from kleinzip import census, maps, ooa


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    m = maps.zip_ooa(ooa.paper_ooa_fixture())
    graphs = {
        "heawood": census.build_heawood(),
        "coxeter": census.build_coxeter(),
        "klein": maps.underlying_graph(m),
        "klein-quartic": maps.dual_graph(m),
    }
    rows = {}
    for name, g in graphs.items():
        t = time.perf_counter()
        rep = census.invariant_report(g)
        rows[name] = dict(rep.as_dict(), seconds=round(time.perf_counter() - t, 3))
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    keys = ["n", "edges", "diameter", "girth", "arc_transitivity", "automorphisms",
            "intersection_array", "weakly_regular", "hamiltonian", "hypohamiltonian"]
    print("graph".ljust(14) + " ".join(k[:12].ljust(12) for k in keys))
    for name, row in rows.items():
        print(name.ljust(14) + " ".join(str(row[k])[:12].ljust(12) for k in keys))


if __name__ == "__main__":
    main()
