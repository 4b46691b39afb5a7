# %% [markdown]
# # Hopf algebras from structure constants
#
# A Hopf algebra is a finite-dimensional vector space with five structure
# tensors (multiplication, unit, comultiplication, counit, antipode).  The
# constructors below build group algebras and Taft algebras; `verify_axioms`
# checks every axiom and reports a witness on failure; `integrals` solves the
# linear systems for the normalized integral pair and derives the
# distinguished grouplikes.

# %%
from hopfinv import (CycScalar, group_algebra, builtin_group, taft, dual, opposite,
                     verify_axioms, integrals, identity_suite, sweedler_power)

H = group_algebra(builtin_group("s3"))
print(verify_axioms(H))

# %%
I = integrals(H)
print("Lambda =", H.render_vec(I.Lambda))          # the sum of all group elements
print("lambda =", [c.render() for c in I.lam])     # the delta function at e
print("alpha(g) =", I.alpha_at_g)                  # group algebras are unimodular

# %% [markdown]
# The Taft algebra T(zeta) is generated by x, g with x^n = 0, g^n = 1,
# gx = zeta xg; it is the classical source of *non*-unimodular behaviour.
# Solving the cointegral system honestly puts lambda on the basis vector
# x^(n-1) g (not x^(n-1)); the pair is normalized so lambda(Lambda) = 1 and
# alpha(g) comes out a primitive root of unity.

# %%
T = taft(4, CycScalar.zeta(4))
J = integrals(T)
print("dim", T.dim)
print("Lambda =", T.render_vec(J.Lambda))
print("lambda supported on:", [T.labels[k] for k, c in enumerate(J.lam) if c])
print("alpha(g) =", J.alpha_at_g)
print("Tr(S^2) =", T.trace(T.s_power(2)), "(zero exactly when non(co)semisimple)")

# %% [markdown]
# Sweedler powers P^(n) multiply the legs of Delta^n; the second indicator
# lamS(P^(2)(Lambda)) counts involutions in the group case and equals Tr(S)
# in complete generality.

# %%
lamS = H.covector_compose(I.lam, H.antipode)
from hopfinv.hopf import _dot
print("nu_2(k[S3]) =", _dot(lamS, sweedler_power(H, 2, I.Lambda)), "= Tr(S) =", H.trace(H.antipode))

# %% [markdown]
# The Radford trace formula and its relatives are machine-checked on every
# basis pair by the identity suite (the same suite the acceptance run uses).

# %%
rep = identity_suite(T)
print(f"{len(rep.checks)} identity families on T(i):", "all pass" if rep.ok else "FAILURES")

# %% [markdown]
# Duals and opposites are constructors too, and integrals transpose as they
# should: the cointegral of H is an integral of H*.

# %%
D = dual(T)
print("dual passes axioms:", verify_axioms(D).ok)
print("integrals of the dual solve fine; alpha(g) there =", integrals(D).alpha_at_g)
