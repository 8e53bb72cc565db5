"""
Implications under conditions
=============================

Fixing a set of conditions turns the triadic context into an ordinary one.
Its stem base describes what follows from what under those conditions.
Condition sets that select the same attributes share one base.
"""

from trifca import build_implication_aggregate, compose, conditional_base_composed, triadic_base_composed
from trifca import fixtures, next_closure


def show(imp, names):
    p, c = imp.names(names)
    return "{" + ",".join(p) + "} -> {" + ",".join(c) + "}"


for case in (1, 2):
    model = fixtures.discriminator_model(case)
    # identical meta-level implications in both cases
    _, meta_base = next_closure(model.k2)
    print(f"case {case} meta base:", [show(i, model.k2.attributes) for i in meta_base])

    table = triadic_base_composed(model, validate=True)
    for k, e in enumerate(table.entries):
        conds = [model.conditions[b] for b in sorted(e.conditions)] or ["(none)"]
        note = f" (same as entry {e.reused_from})" if e.reused_from is not None else ""
        rules = "; ".join(show(imp, model.attributes) for imp in e.base)
        print(f"  {k} {','.join(conds):8} {rules}{note}")

# per single condition, and which conditions each implication survives
model = fixtures.discriminator_model(2)
K = compose(model)
table = conditional_base_composed(model)
agg = build_implication_aggregate(K, table)
for imp in agg.implications:
    where = ",".join(K.conditions[b] for b in sorted(agg.conditions_for(imp)))
    print(f"{show(imp, K.attributes)} holds under {where}")
