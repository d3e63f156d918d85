# %% [markdown]
# # Optics, the transformer, and mates
#
# A costrong functor paired with a strong one maps optics to optics.
# Writer(2) is both, so it acts on lenses.

# %%
import random

from costrength_lab.actions import CART
from costrength_lab.costrength import canonical_strength, writer_costrength
from costrength_lab.functors import Universe, Writer, canonical
from costrength_lab.optics import lens_nf, random_optic, transform_optic

TWO = canonical(2)
U = Universe.of_sizes((0, 1, 2, 3))
o = random_optic(CART, (TWO, TWO, TWO, TWO), TWO, random.Random(7))
t = transform_optic(writer_costrength(TWO, U), canonical_strength(Writer(TWO), U), o)
print("before:", lens_nf(o).get.describe())
print("after: ", lens_nf(t).get.describe())

# %% [markdown]
# Slide classes of representatives are exactly the fibres of the lens normal
# form.  On a small boundary this is checked by enumerating every slide.

# %%
from costrength_lab.optics import slide_completeness_report

rep = slide_completeness_report(CART, (TWO, TWO, TWO, TWO), [canonical(n) for n in range(3)])
print(rep.summary(), rep.counts)

# %% [markdown]
# ## Mates
#
# Through `- x S -| [S, -]`, the strength of Reader(S) transposes to a
# costrength of Writer(S); it is the symmetry.

# %%
from costrength_lab.adjunction import mate_left, writer_reader_adjunction
from costrength_lab.functors import Reader

small = Universe.of_sizes((0, 1, 2))
c = mate_left(writer_reader_adjunction(TWO), canonical_strength(Reader(TWO), small))
print(c.same_as(writer_costrength(TWO, small)))
