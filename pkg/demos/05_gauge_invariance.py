# %% [markdown]
# # Drinfeld twists and machine-verified gauge invariance
#
# Two Hopf algebras have equivalent representation categories exactly when
# one is a Drinfeld twist of the other by a 2-cocycle F: an invertible
# element of H x H with (eps x id)F = (id x eps)F = 1 satisfying
# (1 x F)(id x Delta)(F) = (F x 1)(Delta x id)(F).  The twist keeps the
# algebra, conjugates Delta by F and the antipode by u = f1 S(f2).
#
# A quantity is a *gauge invariant* if it never changes under twisting.
# This demo builds nontrivial cocycles, twists, and compares invariants on
# both sides -- every comparison is an exact scalar equality.

# %%
from hopfinv import (CycScalar, taft, integrals, taft_bicharacter_cocycle,
                     drinfeld_twist, fn_identity_suite, gauge_check, InvariantRequest)

zeta = CycScalar.zeta
T4 = taft(4, zeta(4))

# The bicharacter cocycle on the grouplike subalgebra k[g] of T(i):
# F = sum zeta^(ab) e_a x e_b over the character idempotents e_j.
C = taft_bicharacter_cocycle(T4, 4, zeta(4))
print("cocycle verified; trivial?", C.is_trivial())

# %% [markdown]
# The construction is never trusted analytically: `verify_cocycle` has
# already re-checked normalization, invertibility and the cocycle identity.
# The twisted algebra passes all Hopf axioms, its comultiplication genuinely
# moved, and its cointegral changed, so the twisted integrals must be (and
# are) re-solved from scratch.

# %%
HF = drinfeld_twist(T4, C)
print("Delta moved:", HF.comult != T4.comult)
print("cointegral moved:", integrals(HF).lam != integrals(T4).lam)

# %% [markdown]
# The F_n calculus (F_1 = 1, F_{n+1} = (1 x F_n)(id x Delta^n)(F)) obeys a
# web of insertion / splitting / reduction identities; the suite checks each
# one as an exact tensor equality.

# %%
rep = fn_identity_suite(C, max_n=4)
print(f"{len(rep.checks)} F_n identities:", "all pass" if rep.ok else "FAILURES")

# %% [markdown]
# Gauge invariance, empirically: each invariant is evaluated on H and on H_F
# and compared exactly.  The theorems predict equality; the harness computes
# both sides rather than assuming it.

# %%
requests = ([InvariantRequest("nu", (n,)) for n in (2, 3, 4)]
            + [InvariantRequest("nu_nk", (5, 2)), InvariantRequest("nu_tilde", (6, 5)),
               InvariantRequest("genus2", (2, 2)), InvariantRequest("lens", (7, 2, "fR"))])
for req in requests:
    print(gauge_check(req, C))

# %% [markdown]
# The same harness runs over the cocycles on T(zeta_3) and on the function
# algebra of the Klein four group in the test suite; see
# tests/test_acceptance.py (criterion 5) for the full sweep.
