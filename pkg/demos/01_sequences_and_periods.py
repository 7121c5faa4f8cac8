"""Linear recursions from a bracket, and when they repeat.

A bracket [t1,...,tk] names both the polynomial X^k - t1 X^(k-1) - ... - tk
and the recursion f_n = t1 f_(n-1) + ... + tk f_(n-k).  With the seed
window (0,...,0,1) the terms are exactly the generalized Fibonacci values
of the bracket.
"""

from corepoly import core, generate, is_periodic_over_Z, cyclotomic_core
from corepoly import period_mod_p_bruteforce, period_mod_p_matrix_order, period_scan

# The most famous bracket of all: [1,1] gives the Fibonacci numbers,
# and the sequence extends backwards through the seed window too.
fib = core(1, 1)
print("Fibonacci  f(-5..10):", generate(fib, -5, 10))

# [2,-1] gives the natural numbers: 1, 2, 3, ...
print("Naturals   f(0..9):  ", generate(core(2, -1), 0, 9))

# Periodicity over the integers is rare: it happens exactly when every
# root of the core polynomial is a root of unity, i.e. when C(X) is a
# squarefree product of cyclotomic polynomials.
for c in (core(0, -1), core(1, 1), core(-1, -1, -1, -1)):
    verdict = is_periodic_over_Z(c)
    if verdict.kind == "pure":
        print(f"{c}: periodic over Z with period {verdict.period}")
        print("   first terms:", generate(c, 0, 2 * verdict.period))
    else:
        print(f"{c}: not periodic over Z ({verdict.witness})")

# Cyclotomic brackets realize every period n exactly.
for n in (5, 8, 12):
    c = cyclotomic_core(n)
    print(f"cyclotomic order {n} -> core {c}, period", is_periodic_over_Z(c).period)

# Modulo a prime every recursion is periodic.  Two very different
# algorithms must agree: cycling the seed window until it returns, and
# computing the multiplicative order of the companion matrix from the
# factorization of C mod p.
print("\nFibonacci periods mod p (both algorithms):")
for p in (2, 3, 5, 7, 11, 101):
    brute = period_mod_p_bruteforce(fib, p).period
    fast = period_mod_p_matrix_order(fib, p)
    assert brute == fast
    print(f"  c_{p} = {fast}")

# A scan lines the periods up against ramification: p divides the period
# exactly at the primes dividing the discriminant (5 for Fibonacci).
print("\nscan [1,1] over 2..13:")
for row in period_scan(fib, [2, 3, 5, 7, 11, 13]):
    mark = "<-- p | c_p and p ramifies" if row.p_divides_c else ""
    print(f"  p={row.p:>2}  c_p={row.c_p:>4}  ramified={row.ramified!s:<5} {mark}")
