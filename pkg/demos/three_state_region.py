"""
Three states: where the E_N bound certifies indistinguishability
================================================================

Sweep (theta1, theta2) over [0, pi/4]^2 with a = cos theta1, b = sin theta1,
c = cos theta2, d = sin theta2 and mark the points where E_N of the eta
mixture stays below one ebit. The marked region is exactly
4|ab|^2 - |cd|^2 > 3/4.
"""
from locc_negativity import cross_validate, sweep_grid

n = 41
records = sweep_grid(n, (1, 2, 3))

# rows: theta1 from pi/4 (top) down to 0; columns: theta2 from 0 to pi/4
symbol = {
    "certified_indistinguishable": "#",
    "trivially_distinguishable": "o",
    "known_indistinguishable_by_citation": "B",
    "inconclusive": ".",
}
grid = {(r.theta1, r.theta2): r for r in records}
angles = sorted({r.theta1 for r in records})
for t1 in reversed(angles):
    print("".join(symbol[grid[(t1, t2)].verdict_three] for t2 in angles))
print("# certified   o trivially distinguishable   B three Bell states   . inconclusive")

agree = sum((r.verdict_three == "certified_indistinguishable") == r.cond3 for r in records)
print(f"\nverdict agrees with 4x - y > 3/4 on {agree} of {len(records)} points")

report = cross_validate(records)
print(f"max |numeric - closed| rho {report.max_rho_dev:.1e}, eta {report.max_eta_dev:.1e}")
