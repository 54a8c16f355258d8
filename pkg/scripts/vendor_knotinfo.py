"""Extract the vendored knot subset from a KnotInfo CSV dump.

Usage:
    python scripts/vendor_knotinfo.py path/to/knotinfo_data_complete.csv

The dump ships inside the ``database_knotinfo`` wheel on PyPI.  Output goes to
src/transient/data/knotinfo_subset.csv: every knot with at most 10 crossings
plus the 12-crossing knots whose transient number is decided by cover homology.
"""

import csv
import sys
from pathlib import Path

COLUMNS = [
    "name",
    "pd_notation",
    "braid_notation",
    "seifert_matrix",
    "unknotting_number",
    "tunnel_number",
    "determinant",
]

TWELVE = """12a_427 12a_435 12a_465 12a_466 12a_475 12a_647 12a_742 12a_801 12a_868
12a_975 12a_990 12a_1019 12a_1102 12a_1105 12a_1167 12a_1206 12a_1229 12a_1288
12n_518 12n_533 12n_604 12n_605 12n_642 12n_706 12n_840 12n_879 12n_888""".split()

OUT = Path(__file__).resolve().parent.parent / "src" / "transient" / "data" / "knotinfo_subset.csv"


def main(src):
    csv.field_size_limit(10**9)
    with open(src, newline="") as fh:
        rows = list(csv.DictReader(fh, delimiter="|"))[1:]  # second row repeats the header
    keep = []
    for row in rows:
        cn = row["crossing_number"]
        if (cn and int(cn) <= 10) or row["name"] in TWELVE:
            keep.append({c: row[c] for c in COLUMNS})
    # KnotInfo leaves the unknot without a presentation and lists determinant 0;
    # give it the empty one-strand braid and its actual invariants.
    for rec in keep:
        braid = rec["braid_notation"].replace(" ", "")
        if braid.startswith("[["):
            # several alternative braid words; keep the first
            rec["braid_notation"] = braid[1:braid.index("]") + 1]
        if rec["name"] == "0_1":
            rec.update(braid_notation="[]", unknotting_number="0", tunnel_number="0", determinant="1")
    missing = set(TWELVE) - {r["name"] for r in keep}
    if missing:
        sys.exit(f"missing knots: {sorted(missing)}")
    with open(OUT, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(keep)
    print(f"wrote {len(keep)} rows to {OUT}")


if __name__ == "__main__":
    main(sys.argv[1])
