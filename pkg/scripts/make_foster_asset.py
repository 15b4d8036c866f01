"""Regenerate src/geotrans/data/foster.json from the LCF notation [17,-9,37,-37,9,-17]^15."""

import json
from pathlib import Path

from geotrans.construct import lcf_graph
from geotrans.graph import diameter, girth

OUT = Path(__file__).resolve().parents[1] / "src" / "geotrans" / "data" / "foster.json"


def main():
    g = lcf_graph(90, [17, -9, 37, -37, 9, -17], 15)
    data = {
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "source": "LCF [17,-9,37,-37,9,-17]^15 on a 90-cycle",
        "checks": {"n": 90, "valency": 3, "girth": 10, "diameter": 8},
    }
    assert girth(g) == 10 and diameter(g) == 8
    OUT.write_text(json.dumps(data, indent=None, separators=(",", ":")) + "\n")
    print("wrote", OUT)


if __name__ == "__main__":
    main()
