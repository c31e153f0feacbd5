"""Builds snf_matrices.json: 50 seeded integer matrices with their nonzero
invariant factors as computed by sympy."""
import json, random
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

rng = random.Random(20261016)
cases = []
shapes = [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3), (4, 4), (3, 5), (5, 3), (4, 6), (6, 4)]
for k in range(50):
    r, c = shapes[k % len(shapes)]
    if k % 7 == 3:
        # low rank: product of thin factors
        inner = max(1, min(r, c) - 1)
        a = [[rng.randint(-6, 6) for _ in range(inner)] for _ in range(r)]
        b = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(inner)]
        m = [[sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(c)] for i in range(r)]
    elif k % 11 == 5:
        m = [[rng.randint(-10**17, 10**17) for _ in range(c)] for _ in range(r)]
    elif k % 5 == 1:
        m = [[rng.choice([0, 0, 0, 2, 4, 6, -3, 12]) for _ in range(c)] for _ in range(r)]
    else:
        m = [[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)]
    inv = [abs(int(d)) for d in invariant_factors(Matrix(m), domain=ZZ) if d != 0]
    cases.append({"rows": r, "columns": c, "matrix": [[str(x) for x in row] for row in m],
                  "invariants": [str(x) for x in inv]})
with open(__file__.replace("make_snf.py", "snf_matrices.json"), "w") as f:
    json.dump({"matrices": cases}, f, indent=1)
print(len(cases))
