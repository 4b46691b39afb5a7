# %% [markdown]
# # A genus-2 family: Seifert manifolds M_{m,n}
#
# The genus-2 family M_{m,n} (Seifert manifolds whose fundamental groups are
# centrally extended triangle groups; M_{1,1} is the quaternion space
# S^3/Q8) comes with a fixed diagram framing.  Its invariant admits three
# independent computation paths:
#
#  1. the diagram plan with m+n+6 intersection points,
#  2. a product of two lamS factors over Delta^4(Lambda) x Delta^5(Lambda),
#  3. the trace of (S x S) composed with an explicit operator on H x H.
#
# All three must agree exactly, and on group algebras they must equal the
# number of homomorphism pairs {(a,b) : a^m = bab, b^n = aba} -- counted here
# by brute force as a fourth, independent oracle.

# %%
from hopfinv import (CycScalar, group_algebra, builtin_group, taft, kuperberg,
                     genus2, genus2_trace, fixture, compile_plan)

def hom_count(G, m, n):
    t = G.table
    def power(x, e):
        acc = G.identity
        for _ in range(e):
            acc = t[acc][x]
        return acc
    return sum(1 for a in range(G.order) for b in range(G.order)
               if power(a, m) == t[t[b][a]][b] and power(b, n) == t[t[a][b]][a])

G = builtin_group("q8")
H = group_algebra(G)
for (m, n) in [(1, 1), (1, 2), (2, 2)]:
    plan = compile_plan(fixture("seifert", m, n))
    values = (genus2(m, n, H), genus2_trace(m, n, H), kuperberg(plan, H), hom_count(G, m, n))
    print(f"M_{{{m},{n}}} over k[Q8]: product/trace/plan/count =",
          " = ".join(str(v) for v in values))

# %% [markdown]
# At (1,1) the Seifert fixture *is* the quaternion diagram: same permutation
# (2 6)(4 8), same antipode exponents -- and 28 = #Hom(Q8, Q8) counts the 24
# automorphisms plus the 4 central maps.

# %%
print("seifert(1,1) plan == q8 plan:",
      compile_plan(fixture("seifert", 1, 1)) == compile_plan(fixture("q8")))

# %% [markdown]
# On a Taft algebra the values are honest cyclotomic integers, and the three
# paths still agree exactly.

# %%
T4 = taft(4, CycScalar.zeta(4))
for (m, n) in [(1, 1), (2, 1), (2, 2)]:
    a = genus2(m, n, T4)
    agree = a == genus2_trace(m, n, T4) == kuperberg(compile_plan(fixture("seifert", m, n)), T4)
    print(f"M_{{{m},{n}}} over T(i) = {a}   (three paths agree: {agree})")
