"""Builds presentations.json: finite presentations with faithful permutation
images, plus subgroup words. Images come from the regular action found by
sympy's coset enumeration; each image set is checked against the relators and
its closure order against sympy's own order computation."""
import json
from sympy.combinatorics.free_groups import free_group
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics import Permutation, PermutationGroup
import re

def parse(word, gens):
    # a*b^-1*... over single names
    out = None
    for tok in word.split('*'):
        m = re.fullmatch(r'([A-Za-z]\w*)(?:\^(-?\d+))?', tok)
        g = gens[m.group(1)] ** int(m.group(2) or 1)
        out = g if out is None else out * g
    return out

def entry(name, names, relators, subgroups=()):
    F = free_group(','.join(names))[0]
    gens = dict(zip(names, F.generators))
    rels = [parse(r, gens) for r in relators]
    G = FpGroup(F, rels)
    C = G.coset_table([])
    order = len(C)
    perms = []
    for i in range(len(names)):
        right = [row[2 * i] for row in C]
        inv = [0] * order
        for x, y in enumerate(right):
            inv[y] = x
        # inverse of a right action composes like functions: w(x) = g1(g2(x))
        perms.append(inv)
    P = PermutationGroup([Permutation(p) for p in perms])
    assert P.order() == order, name
    for r in rels:
        img = list(range(order))
        for sym, e in r.array_form:
            p = perms[names.index(str(sym))]
            if e < 0:
                q = [0] * order
                for x, y in enumerate(p):
                    q[y] = x
                p, e = q, -e
            for _ in range(e):
                img = [img[p[x]] for x in range(order)]
        assert img == list(range(order)), (name, r)
    subs = []
    for words in subgroups:
        index = len(G.coset_table([parse(w, gens) for w in words])) if words else order
        subs.append({"words": list(words), "index": index})
    return {"name": name, "generators": names, "relators": relators,
            "degree": order, "images": perms, "order": order, "subgroups": subs}

corpus = []
for n in range(1, 13):
    corpus.append(entry(f"Z{n}", ["a"], [f"a^{n}"], [["a^2"]] if n % 2 == 0 else []))
for m, n in [(2, 2), (2, 3), (2, 4), (3, 3), (2, 6), (4, 4), (3, 5)]:
    corpus.append(entry(f"Z{m}xZ{n}", ["a", "b"], [f"a^{m}", f"b^{n}", "a*b*a^-1*b^-1"], [["a"], ["b"]]))
for n in [2, 3, 4, 5, 6, 7, 8, 10, 12, 15, 25, 50, 100]:
    corpus.append(entry(f"D{2*n}", ["r", "s"], [f"r^{n}", "s^2", "s*r*s*r"], [["s"], ["r"]]))
corpus.append(entry("S3_coxeter", ["a", "b"], ["a^2", "b^3", "a*b*a*b"], [["a"], ["b"]]))
corpus.append(entry("A4", ["a", "b"], ["a^2", "b^3", "a*b*a*b*a*b"], [["a"], ["b"], ["a", "b*a*b^-1"]]))
corpus.append(entry("S4", ["a", "b"], ["a^2", "b^3", "a*b*a*b*a*b*a*b"], [["a"], ["b"], ["a*b"]]))
corpus.append(entry("A5", ["a", "b"], ["a^2", "b^3", "a*b*a*b*a*b*a*b*a*b"], [["a"], ["b"], ["a*b"], ["a", "b"]]))
corpus.append(entry("S4_coxeter3", ["a", "b", "c"], ["a^2", "b^2", "c^2", "a*b*a*b*a*b", "b*c*b*c*b*c", "a*c*a*c"], [["a"], ["a", "b"], ["a", "c"]]))
corpus.append(entry("B3", ["a", "b", "c"], ["a^2", "b^2", "c^2", "a*b*a*b*a*b*a*b", "b*c*b*c*b*c", "a*c*a*c"], [["a", "b"], ["b", "c"]]))
corpus.append(entry("Q8", ["i", "j"], ["i^4", "i^2*j^-2", "j*i*j^-1*i"], [["i"], ["i^2"]]))
corpus.append(entry("Dic3", ["a", "x"], ["a^6", "a^3*x^-2", "x*a*x^-1*a"], [["x"]]))
corpus.append(entry("SL2_3", ["s", "t"], ["s^3", "t^3", "s*t*s*t*s^-3"], [["s"]]))
corpus.append(entry("Heis3", ["x", "y"], ["x^3", "y^3", "x*y*x^-1*y^-1*x*y*x^-1*y^-1*x*y*x^-1*y^-1",
                    "x*x*y*x^-1*y^-1*x^-1*y*x*y^-1*x^-1", "y*x*y*x^-1*y^-1*y^-1*y*x*y^-1*x^-1"], [["x"], ["x", "y*x*y^-1"]]))
corpus.append(entry("Z3semiZ7", ["a", "b"], ["a^7", "b^3", "b*a*b^-1*a^-2"], [["b"], ["a"]]))
corpus.append(entry("PSL2_7", ["a", "b"], ["a^2", "b^3", "a*b*a*b*a*b*a*b*a*b*a*b*a*b",
                    "a*b*a^-1*b^-1*a*b*a^-1*b^-1*a*b*a^-1*b^-1*a*b*a^-1*b^-1"], [["a", "b*a*b^-1"], ["b"], ["a*b"]]))
corpus.append(entry("Z2xS4", ["a", "b", "z"], ["a^2", "b^3", "a*b*a*b*a*b*a*b", "z^2", "a*z*a^-1*z^-1", "b*z*b^-1*z^-1"], [["a", "b"], ["z"]]))
corpus.append(entry("trivial_by_relators", ["a", "b"], ["a*b", "a*b^2", "a^5"], []))
corpus.append(entry("Z5_redundant", ["a", "b"], ["a^5", "b*a^-2"], []))

for e in corpus:
    assert e["order"] <= 200, e["name"]
with open(__file__.replace("make_corpus.py", "presentations.json"), "w") as f:
    json.dump({"presentations": corpus}, f, indent=1)
print(len(corpus), "entries")
