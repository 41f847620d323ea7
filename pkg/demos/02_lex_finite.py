"""The finitely terminating variant: lift, perturb, cut on the first fractional coordinate.

The objective becomes the leading integer variable y0, the right-hand side of
the primal becomes (1, eps, eps**2, ...), and each pivot strictly decreases
the dual solution in lexicographic order.  The result is the lexicographically
greatest optimal solution.
"""
from colgomory import DualFormInstance, brute_force_optimum, lexify, solve_lex
from colgomory.exact import format_mixed

inst = DualFormInstance([[7, 8, -1, 1, 3], [5, 6, -1, 2, 1]], [26, 19], [126, 141, -10, 5, 67])

lx = lexify(inst)
print("lifted constraint matrix (y0, y1, y2):")
for row in lx.lifted.rows:
    print("  ", row)


def trace(ev):
    if ev.kind == "cut":
        print("CUT  [%d] %s" % (ev.data["column"], ev.data["text"]))
    elif ev.kind == "pivot":
        print("PIVOT %d in, %d out, y0 = %s" % (ev.data["enter"], ev.data["leave"], format_mixed(ev.data["z"])))


rep = solve_lex(inst, sink=trace)
print(rep.status, "y* =", rep.y_star, "z* =", rep.z_star)
print("invariant checks run:", dict(rep.checks))

oracle = brute_force_optimum(inst)
print("oracle: z* = %d, optimal set %s, lex-max %s" % (oracle.z, oracle.argmax, oracle.lex_max))

# %% No integer point: 2y <= 1 and -2y <= -1 pin y to 1/2
rep = solve_lex(DualFormInstance([[2, -2]], [1], [1, -1]))
print("pinned instance:", rep.status, "(primal unbounded on column %d)" % rep.unbounded_column)
