# Where is the boundary between the two torus fates?  Bisect on the tube
# radius until the bracket is 1e-3 wide.  Each trial runs a full flow to
# its singularity, so this takes a few seconds per line.

from aximcf.evolution import bisect_critical_radius


def show(trial):
    r, verdict, t_sing = trial
    print(f"  r = {r:.8f}  ->  {verdict:<15s} at t = {t_sing:.4f}")


res = bisect_critical_radius(J=256, dt=1e-4, r_bracket=(0.5, 0.7),
                             tol=1e-3, on_trial=show)
print(f"\ncritical tube radius in [{res.r_lo:.6f}, {res.r_hi:.6f}] "
      f"after {len(res.trials)} trials")
