"""Walk through a two-variable instance by hand, one cut round at a time.

    max 26 y1 + 19 y2
    s.t. 7y1 + 5y2 <= 126,  8y1 + 6y2 <= 141,  -y1 - y2 <= -10,
         y1 + 2y2 <= 5,     3y1 + y2 <= 67,    y integer

Run with ``python demos/01_worked_example.py``.
"""
from colgomory import DualFormInstance, derive_cut_column, factor_basis, primal_simplex
from colgomory.cutgen import cut_as_inequality
from colgomory.exact import format_mixed

inst = DualFormInstance([[7, 8, -1, 1, 3], [5, 6, -1, 2, 1]], [26, 19], [126, 141, -10, 5, 67])

# %% The LP optimum sits at basis {1, 2}
state = factor_basis(inst, [0, 1])
print("inverse:", [[str(x) for x in row] for row in state.inv])
print("y =", [str(v) for v in state.y], " z =", format_mixed(state.dual_objective()))
assert primal_simplex(state).pivots == 0

# %% Both coordinates are fractional; either one yields the same column
for i in (0, 1):
    cut = derive_cut_column(state, i)
    print("source y%d: r=%s  column=%s  cost=%d" % (i + 1, cut.r, cut.b_tilde, cut.cost))
print("as an inequality:", cut_as_inequality(cut, state))

# %% Append it as column 6 and re-optimise from the current basis
inst.add_column(cut.b_tilde, cut.cost)


def show(st, info):
    print("  column %d enters, column %d leaves, z = %s"
          % (info.enter + 1, info.left_column + 1, format_mixed(st.dual_objective())))


primal_simplex(state, on_pivot=show)
print("y =", [str(v) for v in state.y])

# %% Second round: add both cuts, the most negative reduced cost enters
for i in (0, 1):
    cut = derive_cut_column(state, i)
    j = inst.add_column(cut.b_tilde, cut.cost)
    print("column %d: %s" % (j + 1, cut.format()))
primal_simplex(state, on_pivot=show)
print("integer optimum y =", [int(v) for v in state.y], " z =", state.dual_objective())
