"""Order of pi_1 for the Kummer input, computed with sympy from scratch.

Both factors are T = <c1..c4 | ci^2, c1 c2 c3 c4> with every ci -> s in Z/2.
Gt is the index-2 subgroup {(x, y) : phi(x) = phi(y)} of T x T. Its elements
of finite order are conjugates of (ci, z dj z^-1), and that set is closed under
conjugation by all of T x T, so the normal closure in Gt equals the normal
closure N in T x T. Hence |pi_1| = [Gt : N] = |T x T / N| / [T x T : Gt].
"""

import json
import pathlib

from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

F, c1, c2, c3, c4, d1, d2, d3, d4 = free_group("c1 c2 c3 c4 d1 d2 d3 d4")
cs, ds = [c1, c2, c3, c4], [d1, d2, d3, d4]
rels = [x**2 for x in cs + ds] + [c1 * c2 * c3 * c4, d1 * d2 * d3 * d4]
rels += [x * y * x**-1 * y**-1 for x in cs for y in ds]
txt = FpGroup(F, rels)

gt_gens = [cs[0] * x for x in cs[1:]] + [ds[0] * y for y in ds[1:]] + [cs[0] * ds[0]]
gt_index = txt.coset_enumeration(gt_gens).table
gt_index = len(gt_index)

quotient = FpGroup(F, rels + [x * y for x in cs for y in ds])
q_order = quotient.order()

out = {
    "gtilde_index_in_product": gt_index,
    "product_mod_torsion_order": int(q_order),
    "pi1_order": int(q_order) // gt_index,
}
pathlib.Path(__file__).with_name("kummer_oracle.json").write_text(json.dumps(out, indent=2) + "\n")
print(out)
