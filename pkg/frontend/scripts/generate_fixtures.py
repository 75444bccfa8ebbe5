"""Regenerate the recorded service/CLI fixtures used by the UI tests.

Run from the repository root with the Python package installed:

    python3 frontend/scripts/generate_fixtures.py
"""
import json
import pathlib

from fastapi.testclient import TestClient

import circlesweep as cs
from circlesweep import moves
from circlesweep.jsonio import canonical_json
from circlesweep.service import create_app

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"

DISK = {
    "circles": [{"id": "c0", "cx": 0.0, "cy": 0.0, "r": 1.0, "region_side": "inside"}],
    "seed": [0.0, 0.0],
    "tolerance": 1e-9,
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())
    disk_text = canonical_json(DISK)
    (OUT / "disk.json").write_text(disk_text)

    arr = cs.arrangement_from_dict(DISK)
    for name, angle in (("angle0", 0.0), ("angle2p214", 2.214)):
        body = json.dumps(
            {"arrangement": json.loads(disk_text), "move": {"circle": "c0", "angle": angle, "radius": None}}
        )
        r = client.post("/api/move/preview", content=body, headers={"content-type": "application/json"})
        assert r.status_code == 200, r.text
        (OUT / f"preview_{name}.json").write_text(r.text)

        mp = cs.resolve_move_point(arr, "c0", angle)
        cli = canonical_json(moves.verify(arr, mp, None).to_dict())
        (OUT / f"cli_verify_{name}.json").write_text(cli)

        rc = client.post("/api/move/commit", content=body, headers={"content-type": "application/json"})
        assert rc.status_code == 200, rc.text
        (OUT / f"commit_{name}.json").write_text(rc.text)

    gx = client.post("/api/graph?axis=x", content=disk_text, headers={"content-type": "application/json"})
    (OUT / "graph_x.json").write_text(gx.text)
    gy = client.post("/api/graph?axis=y", content=disk_text, headers={"content-type": "application/json"})
    (OUT / "graph_y.json").write_text(gy.text)
    val = client.post("/api/validate", content=disk_text, headers={"content-type": "application/json"})
    (OUT / "validate_disk.json").write_text(val.text)
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
