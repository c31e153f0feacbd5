"""Writes the bundled job files. Vectors are found by plain search and written
as words in the group's generator names; composition is (a*b)(x) = a(b(x))."""

import itertools
import json
import pathlib

HERE = pathlib.Path(__file__).parent


def compose(a, b):
    return tuple(a[x] for x in b)


def identity(n):
    return tuple(range(n))


def closure(gens, n):
    """Elements with a shortest word each, breadth first."""
    words = {identity(n): []}
    queue = [identity(n)]
    for e in queue:
        for k, g in enumerate(gens):
            f = compose(e, g)
            if f not in words:
                words[f] = words[e] + [k]
                queue.append(f)
    return words


def order(p):
    n, q, k = len(p), p, 1
    while q != identity(n):
        q, k = compose(q, p), k + 1
    return k


def product(ps, n):
    out = identity(n)
    for p in ps:
        out = compose(out, p)
    return out


def inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def find_vector(h_gens, n, genus, periods, skip=0):
    words = closure(h_gens, n)
    elems = list(words)
    found = 0
    for ab in itertools.product(elems, repeat=2 * genus):
        for cs in itertools.product(elems, repeat=len(periods)):
            if any(order(c) != m for c, m in zip(cs, periods)):
                continue
            rel = identity(n)
            for j in range(genus):
                a, b = ab[2 * j], ab[2 * j + 1]
                rel = compose(rel, product([a, b, inverse(a), inverse(b)], n))
            rel = compose(rel, product(cs, n))
            if rel != identity(n):
                continue
            if len(closure(list(ab) + list(cs), n)) != len(words):
                continue
            if found == skip:
                return ab, cs, words
            found += 1
    raise ValueError("no vector")


def word_text(w, names):
    return "*".join(names[k] for k in w) if w else "1"


def action(g_gens, names, proj, genus, periods, skip=0):
    """proj: images of G's generators in H (None: identity)."""
    h_gens = g_gens if proj is None else proj
    n = len(h_gens[0])
    ab, cs, words = find_vector(h_gens, n, genus, periods, skip)
    text = lambda e: word_text(words[e], names)
    return {
        "projection": None if proj is None else [list(p) for p in proj],
        "signature": {"genus": genus, "periods": periods},
        "vector": {
            "a": [text(ab[2 * j]) for j in range(genus)],
            "b": [text(ab[2 * j + 1]) for j in range(genus)],
            "c": [text(c) for c in cs],
        },
    }


def job(g_gens, names, actions, **budgets):
    b = {"max_cosets": 200000, "tietze_steps": 10000, "verify_index_bound": 12}
    b.update(budgets)
    return {
        "schema": "pq-pi1-job/1",
        "group": {"degree": len(g_gens[0]), "generators": [list(p) for p in g_gens], "names": names},
        "actions": actions,
        "budgets": b,
        "outputs": ["abelianization", "freeness", "pi1", "structure", "verify"],
    }


def cyc(n):
    return tuple((i + 1) % n for i in range(n))


Z2 = [cyc(2)]
Z3 = [cyc(3)]
Z4 = [cyc(4)]
Z5 = [cyc(5)]
Z6 = [cyc(6)]
K4 = [(1, 0, 2, 3), (0, 1, 3, 2)]
S3 = [(1, 2, 0), (1, 0, 2)]
D4 = [(1, 2, 3, 0), (0, 3, 2, 1)]
# Q8 as the regular representation on itself.
Q8 = [(2, 3, 1, 0, 6, 7, 5, 4), (4, 5, 7, 6, 1, 0, 2, 3)]
TRIV1 = [(0,)]

jobs = {
    "kummer": job(Z2, ["s"], [action(Z2, ["s"], None, 0, [2, 2, 2, 2])] * 2),
    "free_genus3": job(Z2, ["s"], [action(Z2, ["s"], None, 2, [])] * 2),
    "z2_one_curve_genus2": job(Z2, ["s"], [action(Z2, ["s"], None, 0, [2] * 6)]),
    "z3_one_curve_elliptic": job(Z3, ["t"], [action(Z3, ["t"], None, 0, [3, 3, 3])]),
    "s3_one_curve": job(S3, ["r", "f"], [action(S3, ["r", "f"], None, 0, [2, 2, 3])]),
    "z3_two_curves": job(Z3, ["t"], [action(Z3, ["t"], None, 0, [3, 3, 3]),
                                      action(Z3, ["t"], None, 1, [3, 3])]),
    "z2_ramified_times_free": job(Z2, ["s"], [action(Z2, ["s"], None, 0, [2, 2, 2, 2]),
                                               action(Z2, ["s"], None, 2, [])]),
    "k4_two_projections": job(K4, ["x", "y"], [
        action(K4, ["x", "y"], [cyc(2), identity(2)], 0, [2, 2, 2, 2]),
        action(K4, ["x", "y"], [identity(2), cyc(2)], 0, [2, 2, 2, 2])]),
    "k4_faithful": job(K4, ["x", "y"], [action(K4, ["x", "y"], None, 0, [2, 2, 2, 2, 2])] * 2),
    "z2_trivial_factor": job(Z2, ["s"], [action(Z2, ["s"], [TRIV1[0]], 1, []),
                                          action(Z2, ["s"], None, 0, [2, 2, 2, 2])]),
    "z4_two_curves": job(Z4, ["u"], [action(Z4, ["u"], None, 0, [2, 4, 4])] * 2),
    "z5_two_curves": job(Z5, ["v"], [action(Z5, ["v"], None, 0, [5, 5, 5]),
                                      action(Z5, ["v"], None, 0, [5, 5, 5], skip=1)]),
    "s3_two_curves": job(S3, ["r", "f"], [action(S3, ["r", "f"], None, 0, [2, 2, 3]),
                                           action(S3, ["r", "f"], None, 0, [2, 2, 2, 2])]),
    "z2_three_curves": job(Z2, ["s"], [action(Z2, ["s"], None, 0, [2, 2, 2, 2])] * 3),
    "z6_two_curves": job(Z6, ["w"], [action(Z6, ["w"], None, 0, [2, 3, 6])] * 2),
    "d4_two_curves": job(D4, ["r", "f"], [action(D4, ["r", "f"], None, 0, [2, 2, 2, 4])] * 2),
    "q8_two_curves": job(Q8, ["i", "j"], [action(Q8, ["i", "j"], None, 0, [4, 4, 4])] * 2),
    "z2_mixed_free": job(Z2, ["s"], [action(Z2, ["s"], None, 1, [2, 2]),
                                      action(Z2, ["s"], None, 2, [])]),
    "z3_free_elliptic": job(Z3, ["t"], [action(Z3, ["t"], None, 1, [])] * 2),
    "s3_onto_z2": job(S3, ["r", "f"], [
        action(S3, ["r", "f"], [identity(2), cyc(2)], 0, [2, 2, 2, 2]),
        action(S3, ["r", "f"], None, 0, [2, 2, 3])]),
}

assert len(jobs) == 20
for name, j in jobs.items():
    (HERE / f"{name}.json").write_text(json.dumps(j, indent=2) + "\n")
print("wrote", len(jobs), "jobs")
