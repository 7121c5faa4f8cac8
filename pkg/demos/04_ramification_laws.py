"""Ramification, the different, and the period laws (with their limits).

The discriminant of the core polynomial knows everything about bad
primes: p divides it exactly when C mod p has a repeated factor, exactly
when the ring F_p[x]/(C) has a nontrivial radical, and, remarkably,
exactly when p divides the recursion period.  This demo sweeps those
equivalences and then shows precisely where two tempting strengthenings
break down.
"""

from corepoly import (
    core, core_to_poly, different_element, discriminant, factor_mod_p,
    ramifies, verify_period_law, verify_ramification_theorem,
)
from corepoly import evaluate, glp
from corepoly.companion import companion_matrix
from corepoly.semilocal import trace_orbit_sums

# disc([1,1]) = 5: the Fibonacci recursion misbehaves only at 5.
print("disc [1,1]  =", discriminant(core(1, 1)))
print("disc [2,-1] =", discriminant(core(2, -1)), " (zero: ramifies at every prime)")
print("ramifies([1,1], 5):", ramifies(core(1, 1), 5), "  at 7:", ramifies(core(1, 1), 7))

# The derivative of C, read as a ring element, is the classical witness:
# its orbit under the companion matrix carries the Lucas values down the
# right-hand column.
c = core(0, 2, 1)
d = different_element(c)
print(f"\ndifferent of {c} in the power basis: {d}")
a = companion_matrix(c)
column = []
v = d
for n in range(8):
    column.append(v[-1])
    v = a.row_mul(v)
print("right column of its orbit:", column)
print("Lucas values:            ", [evaluate(glp(3, n), c.t) for n in range(8)])

# p | c_p  <=>  p ramifies: exhaustively over a grid of quadratic cores.
cores = [core(a_, b_) for a_ in range(-2, 3) for b_ in range(-2, 3) if b_ != 0]
rep = verify_ramification_theorem(cores, [2, 3, 5, 7, 11])
print(f"\nperiod/ramification equivalence: {rep.pairs_checked} pairs, "
      f"{len(rep.failures)} failures")

# The fine structure: c_p is always a multiple of L = lcm of the factor
# periods, with equality iff p is unramified, and c_p/L a power of p
# otherwise.  The stronger product law c_p = L*|J| usually holds but is
# not a theorem of this generality:
print("\nperiod laws:")
for t, p in [((0, 2, 1), 3), ((1, 1), 5), ((2, -1), 5), ((0, 1, 0, 1), 2)]:
    r = verify_period_law(core(*t), p)
    verdict = "holds" if r.thm_6_8_2_holds else "FAILS"
    print(f"  {str(core(*t)):>12} mod {p}: c_p={r.c_p:>2}  L={r.lcm_factor_periods}  "
          f"|J|={r.radical_order}  product law {verdict}")
print("  ([0,1,0,1] mod 2 is the standing counterexample: C = (X^2+X+1)^2,")
print("   c=6 while L*|J| = 3*4 = 12; the divisibility laws still hold.)")

# A second edge of the theory: trace sums over a maximal ideal vanish
# whenever p is odd or the ideal is at least 2-dimensional, but a
# 1-dimensional ideal over F_2 with an odd-trace generator escapes.
print("\ntrace totals per maximal ideal:")
for t, p in [((0, 2, 1), 3), ((0, 0, 1), 2)]:
    cc = core(*t)
    fact = factor_mod_p(core_to_poly(cc), p)
    for idx in range(fact.s):
        r = trace_orbit_sums(cc, p, idx)
        print(f"  {str(cc):>10} mod {p}, ideal {idx}: per-orbit identity "
          f"{'ok' if r.componentwise_ok else 'BROKEN'}, total {r.ideal_trace_total}"
          + ("  <- nonzero!" if not r.total_ok else ""))
