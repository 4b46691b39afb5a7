# %% [markdown]
# # Framed Heegaard diagrams and evaluation plans
#
# A framed Heegaard diagram records, per gluing curve, the ordered
# intersection points with their rotation numbers theta (quarter turns of the
# curve tangent against the combing) and phi (signed twist-front crossings),
# plus the curve totals.  Admissibility -- theta = -phi on upper curves,
# theta = phi on lower curves -- is exactly the condition for the data to
# extend to a framing of the 3-manifold.

# %%
from hopfinv import parse_diagram, check_admissibility, compile_plan, stabilize, fixture
from hopfinv.diagram import render_diagram, lens_fR_plan, lens_fL_plan

print(render_diagram(fixture("s3")))

# %%
D = fixture("q8")  # the quaternion manifold S^3/Q8, genus 2, 8 points
for side, name, ok in check_admissibility(D):
    print(side, name, "admissible" if ok else "NOT admissible")

# %% [markdown]
# Compiling a diagram orders the points along the lower curves (p_1..p_n) and
# along the upper curves (p^1..p^n), producing the permutation sigma with
# p_{sigma(r)} = p^r and the antipode exponents s_r = 2(theta_eta - theta_mu) + 1/2.
# For the quaternion fixture sigma comes out as (2 6)(4 8).

# %%
plan = compile_plan(D)
print("sigma =", list(plan.sigma))
print("s     =", list(plan.s))
print("theta totals:", plan.theta_lower, plan.theta_upper)

# %% [markdown]
# Lens spaces have closed-form plans: the s-exponents satisfy a three-case
# recursion along the traversal cycle i -> i+k (mod n).  The L(8,3) rotation
# tables transcribed as diagram files compile to exactly the recursion output
# -- two independent derivations of the same combinatorics.

# %%
print("fR(8,3):", list(lens_fR_plan(8, 3).s), "sigma", list(lens_fR_plan(8, 3).sigma))
print("table path equals recursion path:",
      compile_plan(fixture("l83_fR")) == lens_fR_plan(8, 3),
      compile_plan(fixture("l83_fL")) == lens_fL_plan(8, 3))

# %% [markdown]
# The stabilization move adds a handle carrying one new point whose block
# contributes lam(S(Lambda)) = 1, so invariants do not change; stabilizing
# the empty diagram produces the 3-sphere fixture.

# %%
from hopfinv.diagram import FramedDiagram
print("stabilize(empty) == s3 fixture:",
      compile_plan(stabilize(FramedDiagram(0, [], []))) == compile_plan(fixture("s3")))

# %% [markdown]
# The same text format round-trips through the parser, which checks point
# bookkeeping (each point once per side) and the rotation grain.

# %%
text = render_diagram(D)
assert compile_plan(parse_diagram(text)) == plan
print("round trip exact")
