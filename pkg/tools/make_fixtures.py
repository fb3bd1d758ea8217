"""Regenerate the pinned per-orbit representative matrices.

For each exceptional / non-crystallographic group this discovers the
braid orbits of generating reflection tuples (exhaustively where the
state space fits, by seeded sampling otherwise), picks one tuple per
orbit, and stores its sign-canonical arrangement matrix together with
the discovery provenance in src/braidrefl/data/representatives.json.

Run from the repository root:  python3 tools/make_fixtures.py
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from braidrefl.arrangement import sign_canonical  # noqa: E402
from braidrefl.catalog import arrangement_of_reflections, root_system  # noqa: E402
from braidrefl.orbits import count_generating_orbits  # noqa: E402

GROUPS = [
    ("F4", "exhaustive", None),
    ("H3", "exhaustive", None),
    ("H4", "exhaustive", None),
    ("E6", "seeded", 3000),
    ("E7", "seeded", 3000),
    # E8 needs the larger budget: its rarest conjugation class shows up
    # only about once per few thousand generating samples
    ("E8", "seeded", 10000),
]
RNG_SEED = 0


def representative_entry(group, tup, provenance):
    R = root_system(group)
    B = sign_canonical(arrangement_of_reflections(R, tup))
    from braidrefl.linalg import charpoly, det
    from braidrefl.quasicox import cox_matrix, cyclo_fingerprint
    from braidrefl.exactnum import format_expr

    fp = cyclo_fingerprint(charpoly(cox_matrix(B)))
    return {
        "matrix": json.loads(B.to_json()),
        "fingerprint": json.loads(fp.to_json()),
        "det": format_expr(det(B.rows())),
        "order": fp.implied_order(),
        "tuple": list(tup),
        "provenance": provenance,
    }


def main():
    only = set(sys.argv[1:])
    dest = (
        pathlib.Path(__file__).resolve().parent.parent
        / "src" / "braidrefl" / "data" / "representatives.json"
    )
    out = {}
    if only and dest.exists():
        out = json.loads(dest.read_text())
    for group, mode, budget in GROUPS:
        if only and group not in only:
            continue
        print(f"== {group} ({mode}) ==", flush=True)
        kwargs = {"mode": mode}
        if budget is not None:
            kwargs["budget"] = budget
            kwargs["seed"] = RNG_SEED
        report = count_generating_orbits(group, **kwargs)
        entries = []
        for orbit in report.orbits:
            tup = tuple(orbit["rep_tuple"])
            prov = {"mode": mode}
            if mode == "seeded":
                prov["budget"] = budget
                prov["rng_seed"] = RNG_SEED
                prov["samples"] = report.samples
            else:
                prov["orbit_size"] = orbit.get("size")
            entries.append(representative_entry(group, tup, prov))
        entries.sort(key=lambda e: json.dumps(e["fingerprint"], sort_keys=True))
        out[group] = entries
        print(f"   {len(entries)} orbits", flush=True)
    dest.parent.mkdir(parents=True, exist_ok=True)
    dest.write_text(json.dumps(out, indent=1))
    print("wrote", dest)


if __name__ == "__main__":
    main()
