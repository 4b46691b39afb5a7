# %% [markdown]
# # Exact cyclotomic arithmetic
#
# Every number in this package is an element of some Q(zeta_N), stored as an
# exact rational polynomial in the power basis modulo the N-th cyclotomic
# polynomial.  There is no floating point anywhere: two values are equal
# exactly or not at all.

# %%
from hopfinv import CycScalar, parse_scalar

zeta = CycScalar.zeta

# The defining relation of the Gaussian integers:
i = zeta(4)
print("i * i =", i * i)

# All cube roots of unity sum to zero:
w = zeta(3)
print("1 + w + w^2 =", 1 + w + w ** 2)

# %% [markdown]
# Inverses run through extended Euclid against Phi_N; the check that matters
# is multiplying back.

# %%
x = 1 - zeta(5)
print("(1 - zeta_5)^-1 =", x.inv())
print("multiplied back:", x.inv() * x)

# %% [markdown]
# Different conductors interoperate through the least common conductor:
# zeta_3 viewed in Q(zeta_12) is zeta_12^4, and mixed arithmetic promotes
# automatically.

# %%
print("zeta_3 in Q(zeta_12):", zeta(3).embed(12))
mixed = zeta(3) + zeta(4)
print("zeta_3 + zeta_4 =", mixed)
print("back down to Q(zeta_3):", (mixed - zeta(4)).project(3))

# %% [markdown]
# Roots of unity are decidable exactly; this is what later asserts that
# alpha(g) is a root of unity of order dividing dim(H).

# %%
for value in [-i, 1 + w, CycScalar.from_rational(2)]:
    ok, order = value.is_root_of_unity()
    print(f"{value}: root of unity = {ok}" + (f", order {order}" if ok else ""))

# %% [markdown]
# The canonical text form round-trips exactly.

# %%
v = 8 - 8 * i
print(v.render(), "->", parse_scalar(v.render()) == v)
