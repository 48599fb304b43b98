"""Turn a countable order into an explicit maximal chain of sets of naturals.

Each point a is sent to the set of jump endpoints d_i with d_i <= a. The
certificate checks that crossing each jump adds exactly one index.

Run: python3 demos/build_chain.py
"""

from orderchains import BuildRefused, build_chain, certify, parse
from orderchains.chains import bitset_to_set
from orderchains.elements import LazySeq, code_to_json, elements

for text in ["w* + w", "dropmin(dropmax(C))"]:
    t = parse(text)
    h = build_chain(t)
    print(f"{text}: first jump endpoints {[code_to_json(d) for d in h.denum.enumerate(4)]}")
    for a in LazySeq(elements(t)).prefix(5):
        print(f"  {code_to_json(a)!s:40} -> {sorted(bitset_to_set(h.trace(a, 8)))}")
    cert = certify(h, 64)
    print(f"  certificate on 64 points: passed={cert.passed}, boundary_ok={cert.boundary_ok}")
    print(f"  ({cert.note})\n")

try:
    build_chain(parse("Q"))
except BuildRefused as e:
    print(f"Q refused: {e.verdict.failed_conditions}")
