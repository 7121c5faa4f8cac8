"""Inside the finite ring F_p[x]/(C): the worked cubic example.

The bracket [0,2,1] mod 3 factors as (X+1)(X^2+2X+2), so the 27-element
ring splits into F_3 x F_9.  This demo reproduces its complete anatomy:
idempotents, unit group of order 16, period subgroup of order 8 (the
recursion period), index-2 coset structure, and the orbit partition.
"""

from corepoly import (
    RingElement, core, decompose, norm, orbit_partition,
    primitive_idempotents, rank, standard_matrix, trace,
)
from corepoly.semilocal import ideal_elements, orbit_members

c, p = core(0, 2, 1), 3
s = decompose(c, p)

print(f"ring F_{p}[x]/(C) for core {c}")
print(f"  |R| = {s.ring_order}, |G| = {s.unit_group_order}, |J| = {s.radical_order}")
print(f"  period c_{p} = {s.period}, unit cosets [G:H] = {s.unit_index}")
print(f"  classification: {s.classification}")
for f in s.factors:
    print(f"  factor coeffs {list(f.poly)}: degree {f.r}, multiplicity {f.e}, period {f.factor_period}")

# The primitive idempotents cut the ring into its local pieces.  Reduced
# mod 3 they are (2,1,2) and (2,2,1), i.e. (-1,1,-1) and (-1,-1,1).
e1, e2 = primitive_idempotents(c, p)
print("\nidempotents:", e1.coords, e2.coords)
print("  orthogonal:", (e1 * e2).is_zero(), " sum to 1:", (e1 + e2).coords)
print("  ranks:", rank(e1), "+", rank(e2), "=", rank(e1) + rank(e2), "= k")

# Every element acts on the ring by multiplication; its standard matrix
# has rows m, mA, mA^2 and supplies trace, norm and rank.
lam = RingElement(c, p, (0, 1, 0))
print("\nstandard matrix of lambda (the companion matrix itself):")
for row in standard_matrix(lam).rows:
    print("   ", row)
print("trace(lambda^2) =", trace(lam * lam), " norm(lambda) =", norm(lam))

# The companion matrix partitions all 27 vectors into orbits: the zero
# singleton, ideal orbits, and unit orbits which are exactly the cosets
# of the period subgroup (so each has length c_p = 8).
part = orbit_partition(c, p)
print("\norbit partition:")
for o in part.orbits:
    print(f"   rep {o.rep}  length {o.length:>2}  {o.tag}")

# Ideals are unions of orbits; walk the 9-element ideal of the linear factor.
members = sorted(ideal_elements(c, p, 0))
print("\nideal of the linear factor has", len(members), "elements:")
seen = set()
for v in members:
    if v in seen:
        continue
    orbit = list(orbit_members(c, p, v))
    seen.update(orbit)
    print("   orbit:", orbit)
