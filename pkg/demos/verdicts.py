"""Which order types are maximal chains in [kappa]^{lambda|mu}?

Run: python3 demos/verdicts.py
"""

from orderchains import CardinalChain, attrs, characterize, characterize_omega, init_class_profile, parse

chain = CardinalChain.parse("fin<aleph0<l<+l+<k")
k, l = chain.card("k"), chain.card("l")

print("Countable case: weakly Boolean, no endpoints, weight at most aleph0")
for text in ["w* + w", "dropmin(dropmax(C))", "Sum[Z; C]", "Q", "w", "w + w*"]:
    v = characterize_omega(parse(text))
    print(f"  {text:22} passed={v.passed!s:5}  failed={v.failed_conditions}")

print("\nUncountable cases, decided from weight profiles")
for text, lam, mu in [("k* + k", k, k), ("l* + l+", l, k), ("(l+)* + l", k, l), ("k + k*", k, k)]:
    t = parse(text, chain)
    a = attrs(t, chain)
    v = characterize(t, k, lam, mu)
    print(f"  {text:12} target {v.target}  case {v.case}  passed={v.passed!s:5}"
          f"  w_init={a.w_init}  w_fin={a.w_fin}")

print("\nClasses of P(w1) met by the initial-segment chain")
w1 = CardinalChain.parse("+w1")
for text in ["w1 + w1*", "w1* + w1", "w* + w1"]:
    labels = sorted(c.short("w1") for c in init_class_profile(parse(text, w1), w1.card("w1")))
    print(f"  {text:10} {labels}")
