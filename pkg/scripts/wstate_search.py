"""Search 4-vertex, 2-color graphs realizing one green vertex with weights (1, 1, 2, i)."""

import argparse

from bicolor.catalog import WSTATE_PALETTE
from bicolor.experiments import wstate_search
from bicolor.io import dumps_graph, state_report
from bicolor.state import compute_state


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("-o", "--output")
    args = parser.parse_args()

    results = wstate_search(seed=args.seed)
    exact = [r for r in results if r.exact]
    print(f"{len(exact)} exact hit(s)")
    if not exact:
        return
    graph = exact[0].graph
    print(state_report(compute_state(graph)))
    text = dumps_graph(graph)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    print("palette:", ",".join(WSTATE_PALETTE))


if __name__ == "__main__":
    main()
