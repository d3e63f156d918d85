# %% [markdown]
# # Costrengths and copoints
#
# A cartesian costrength pulls a product out of a functor:
# `cst : F(M x X) -> M x F(X)`. On finite sets we can list every one of them
# and compare the list with the list of copoints `F => Id`.

# %%
from costrength_lab import enumerate_copoints, enumerate_costrengths, phi, psi
from costrength_lab.functors import MAYBE, Costate, ProdF, ID, Reader, Writer, canonical, default_universe

U = default_universe()
TWO = canonical(2)

for F in (ID, Writer(TWO), Reader(TWO), Costate(TWO), MAYBE, ProdF(ID, MAYBE)):
    csts = list(enumerate_costrengths(F, universe=U))
    pts = list(enumerate_copoints(F, universe=U))
    print(f"{str(F):16} costrengths={len(csts)}  copoints={len(pts)}")

# %% [markdown]
# Maybe has neither: `Nothing` has nowhere to go.  Reader(2) has one per
# element of the exponent, and Costate(2) has four, so costrengths need not
# be unique.
#
# The two maps between the lists are inverse to each other:

# %%
for c in enumerate_costrengths(Reader(TWO), universe=U):
    eps = phi(c)
    back = psi(eps, U)
    print(eps.at(TWO).describe(), "round trip:", back.same_as(c))

# %% [markdown]
# Components are plain tables, so one can look at them directly.

# %%
(w,) = enumerate_costrengths(Writer(TWO), universe=U)
print(w.at(TWO, TWO).describe())
