"""Permutation arithmetic and the group kernel.

Conventions used everywhere in the library:
  * points are 1-based, the degree always travels with the value;
  * products apply the LEFT factor first: (p * q)(i) = q(p(i));
  * commutators are [x, y] = x^-1 y^-1 x y.
"""

from centerbound import Group, commutator, compose, identity, parse_perm

p = parse_perm("(1 2 3)", 5)
q = parse_perm("(1 2)(4 5)", 5)

print("p          =", p)
print("q          =", q)
print("p * q      =", compose(p, q), "  (apply p first, then q)")
print("q * p      =", compose(q, p))
print("p^-1       =", p.inverse())
print("[p, q]     =", commutator(p, q))
print("p applied to 1:", p.apply(1))
print()

# Building a group triggers a deterministic Schreier-Sims run the first time
# an order or membership question is asked.
sym4 = Group(4, [parse_perm("(1 2)", 4), parse_perm("(1 2 3 4)", 4)])
print("Sym(4) order:", sym4.order())
print("base points of the stabilizer chain:", sym4.base)
print("(1 3) in Sym(4)?", sym4.contains(parse_perm("(1 3)", 4)))

alt4 = Group(4, [parse_perm("(1 2 3)", 4), parse_perm("(2 3 4)", 4)])
print("Alt(4) order:", alt4.order())
print("(1 2) in Alt(4)?", alt4.contains(parse_perm("(1 2)", 4)))
print("(1 2)(3 4) in Alt(4)?", alt4.contains(parse_perm("(1 2)(3 4)", 4)))
print()

# Element enumeration is deterministic (transversal order) and capped: the
# cap fails loudly instead of sampling.
elems = alt4.elements()
print("Alt(4) elements, first five:", [str(e) for e in elems[:5]])

import random
rng = random.Random(0)
draws = [sym4.random_element(rng) for _ in range(5)]
print("five seeded random elements of Sym(4):", [str(d) for d in draws])
print()
print("identity of degree 6 prints as:", identity(6))
