"""Braid-orbit counts of generating reflection tuples, with invariants.

For each small Coxeter group, enumerate all rank-size generating tuples
of reflections up to the braid action and print one line per orbit:
its size, the determinant of the arrangement matrix, and the
characteristic polynomial fingerprint of the ordered product.
"""

from braidrefl.orbits import count_generating_orbits


def fingerprint(fp):
    parts = [f"Phi_{d}" + (f"^{m}" if m > 1 else "") for d, m in fp["cyclotomic"]]
    parts += [f"quad({p}/{q})" for p, q in fp["quadratic"]]
    return " * ".join(parts) or "1"


for group in ("A3", "B3", "D4", "H3", "F4"):
    report = count_generating_orbits(group, mode="exhaustive")
    print(f"{group}: {report.count} orbit(s) among "
          f"{report.total_generating} generating tuples")
    for o in report.orbits:
        line = (f"  size {o['size']:>6}  det = {o['det']:<12} "
                f"charpoly = {fingerprint(o['charpoly'])}")
        if "cycle_type" in o:
            line += f"  axes cycle type {tuple(o['cycle_type'])}"
        print(line)
    print()

print("H4 has eleven orbits; its table is pinned in the catalog:")
from braidrefl.catalog import orbit_representatives

for entry in orbit_representatives("H4"):
    print(f"  det = {entry['det']:<22} charpoly = {fingerprint(entry['fingerprint'])}")
