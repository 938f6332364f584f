"""The statement catalog: every bound as a checkable predicate.

A Verdict carries exact integer sides, hypothesis and cap flags, and (for
the index-bound lemmas) the constructed witness.  Ranks that cannot be
computed under the caps make a verdict uncomputable -- the engine never
substitutes a guess.
"""

from centerbound import (Config, STATEMENT_TAGS, build_group, evaluate,
                         evaluate_all, parse_group_spec)

def group(text):
    return build_group(parse_group_spec("family:" + text))

cfg = Config()

# one group end to end
G = group("direct_product(symmetric(3),dihedral(4))")
print("statement catalog on Sym(3) x Dih(4):")
for v in evaluate_all(G, cfg):
    flag = "holds" if v.holds else "VIOLATED"
    gate = "" if v.applicable else " (vacuous)"
    print(f"  {v.statement:>3}: {v.lhs} <= {v.rhs}  {flag}{gate}")
print()

# tight instances are worth staring at: LA on the generalized quaternion
# group of order 16 meets its bound with equality
v = evaluate("LA", group("dicyclic(4)"), cfg)
print("LA on dicyclic(4):", v.lhs, "<=", v.rhs, "-", v.notes)
w = v.witness.per_prime[2]
print("  witness elements:", [str(x) for x in w.xs])
print()

# hypothesis gates: p-group statements are vacuous off p-groups, and the
# trivial-center statements are vacuous when the center is nontrivial
for tag, text in (("T7", "symmetric(6)"), ("T5", "dihedral(4)")):
    v = evaluate(tag, group(text), cfg)
    print(f"{tag} on {text}: applicable={v.applicable} ({v.notes})")

# caps surface as uncomputable verdicts, never as guessed bounds
v = evaluate("T1", group("symmetric(6)"), cfg)
print("T1 on symmetric(6): computable =", v.computable, "-", v.notes)
print()
print("catalog:", ", ".join(STATEMENT_TAGS))
