"""The companion matrix and its Schur-polynomial anatomy.

Powers of the companion matrix are not just numbers: every entry of A^n
is a signed Schur polynomial of hook shape evaluated at the bracket, the
trace of A^n is the degree-n Lucas polynomial, and the right-hand column
runs through the Fibonacci values.  Stacking the orbit rows gives a
doubly infinite matrix whose row n holds the coordinates of lambda^(n+k-1)
over the basis {1, lambda, ..., lambda^(k-1)}.
"""

from corepoly import (
    companion_matrix, core, evaluate, formal_partial, gfp, glp,
    infinite_slice, negative_schur_identities_check, power,
    root_power_coordinates, schur_via_jacobi_trudi, trace_sequence,
)
from corepoly.companion import hook_entry_value

c = core(1, 1, 1)
print("companion matrix of", c)
for row in companion_matrix(c).rows:
    print("   ", row)

# Entry (i,j) of A^n equals (-1)^(k-j) S_(n-k+i, 1^(k-j)) at t.  The
# Schur values come from an independent construction: the Jacobi-Trudi
# determinant over the Fibonacci polynomials.
n = 5
m = power(c, n)
print(f"\nA^{n} alongside the signed Schur-hook oracle:")
for i in (1, 2, 3):
    entries = [m.rows[i - 1][j - 1] for j in (1, 2, 3)]
    oracle = [hook_entry_value(c, n, i, j) for j in (1, 2, 3)]
    assert entries == oracle
    print("   ", entries)

# The hooks themselves are honest symmetric polynomials:
print("\nS_(2,1) at level 3:", schur_via_jacobi_trudi((2, 1), 3).to_text())
print("S_(4)   at level 3:", schur_via_jacobi_trudi((4,), 3).to_text(), "(= degree-4 Fibonacci polynomial)")

# Traces of powers are the Lucas values; differentiating a Lucas
# polynomial with respect to t_j drops it onto n times a Fibonacci one.
print("\ntraces of A^n, n=0..8:", trace_sequence(c, 0, 8))
print("same thing symbolically:", [evaluate(glp(3, n), c.t) for n in range(9)])
print("d/dt2 of glp(3,5):", formal_partial(glp(3, 5), 2).to_text())
print("5 * gfp(3,3):     ", gfp(3, 3).scale(5).to_text())

# Row n of the infinite slice is e_k A^n; the identity block sits at rows
# 1-k..0 and the right column is the Fibonacci sequence in both directions.
sl = infinite_slice(c, -4, 6)
print("\norbit rows -4..6 (right column = Fibonacci values):")
for n in range(-4, 7):
    print(f"   row {n:>2}: {sl.row(n)}")

# lambda^n written in the power basis; for the golden bracket [1,1] this
# is the textbook identity lambda^5 = 3 + 5*lambda.
print("\nlambda^5 coordinates for [1,1]:", root_power_coordinates(core(1, 1), 5))

# Negatively indexed rows need exact rationals once t_k is not a unit,
# and their entries are quotients of ordinary Schur polynomials by powers
# of t_3.  The report shows which candidate shape matches each entry.
rep = negative_schur_identities_check(core(1, 2, 3), range(2, 7))
print("\nnegative-index quotient report for [1,2,3]:")
for row in rep.rows:
    line = [f"n={row['n']}"]
    for ident in row["identities"]:
        best = next((f"{c_['shape']}{c_['match']}" for c_ in ident["candidates"]
                     if c_["match"] in "+-0"), "none")
        line.append(f"{ident['name']}~{best}")
    print("   ", "  ".join(line))
print("all entries matched a quotient:", rep.all_consistent())
