# Convergence of both time stepping schemes on the forced torus whose
# exact motion is known in closed form.  Errors are measured in L2 and H1
# over the whole run (T = 1, dt = h^2) and printed with their observed
# orders; expect 2 and 1.

from aximcf.evolution import run_convergence

for scheme in ("p", "q"):
    table = run_convergence(scheme, "manufactured-torus", (32, 64, 128))
    print(f"\nscheme {scheme} ({table.scheme}), case {table.case}")
    print(f"{'J':>5} {'max L2':>12} {'EOC':>6} {'max H1':>12} {'EOC':>6}")
    for row in table.rows:
        e2 = "" if row.eoc_L2 is None else f"{row.eoc_L2:6.2f}"
        e1 = "" if row.eoc_H1 is None else f"{row.eoc_H1:6.2f}"
        print(f"{row.J:>5} {row.maxL2:>12.4e} {e2:>6} "
              f"{row.maxH1:>12.4e} {e1:>6}")
