# %% [markdown]
# # Stream automata along a costrength
#
# An automaton `C -> M x C` emits a stream. Lifting it along a costrength of
# `F` gives an automaton on `F(C)`, and its behaviour is that of the state a
# copoint extracts.

# %%
from costrength_lab.costrength import enumerate_costrengths
from costrength_lab.functors import Costate, canonical, default_universe
from costrength_lab.streams import StreamAutomaton, behavior_lasso, extraction_semantics_report, lift

TWO = canonical(2)
a = StreamAutomaton.from_tables([0, 1, 1], [1, 2, 1])  # outputs, successors
for q in range(3):
    print(q, behavior_lasso(a, q).render(a.alphabet))

# %%
for c in enumerate_costrengths(Costate(TWO), universe=default_universe()):
    lifted = lift(a, c)
    rep = extraction_semantics_report(a, c)
    print(f"{len(lifted.states)} lifted states: {rep.summary()}")

# %% [markdown]
# ## Coinduction up to `X x X`
#
# Each state emits a letter and names two successors; the copoint picks which
# one the stream continues from.  The solution is unique among all automata
# on the carrier.

# %%
from costrength_lab import finset as fs
from costrength_lab.costrength import Copoint
from costrength_lab.functors import ID, NatFamily, ProdF
from costrength_lab.streams import UpToSystem, all_lassos, solve_up_to

F = ProdF(ID, ID)
X = canonical(3)
eps = Copoint(F, NatFamily(F, ID, rule=lambda Y: fs.pi2(Y, Y)))
system = UpToSystem(X, TWO, F, eps, fs.FinFun(X, fs.product(TWO, fs.product(X, X)), [5, 11, 15]))
sol, rep = solve_up_to(system, uniqueness=True)
print([l.render(TWO) for l in all_lassos(sol)])
print(rep.render())
