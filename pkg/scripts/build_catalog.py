"""Regenerate the JSON files in src/bicolor/catalog from their constructors."""

import json

from bicolor import catalog
from bicolor.io import dumps_graph, target_to_document


def main():
    for name, graph in catalog.builders().items():
        (catalog.CATALOG_DIR / name).write_text(dumps_graph(graph))
        print("wrote", name)
    doc = target_to_document(catalog.wstate_target(), catalog.WSTATE_PALETTE)
    (catalog.CATALOG_DIR / "wstate.target.json").write_text(json.dumps(doc, indent=2) + "\n")
    print("wrote wstate.target.json")


if __name__ == "__main__":
    main()
