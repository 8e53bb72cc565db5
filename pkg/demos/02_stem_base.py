"""
Implications and the stem base
==============================

Next Closure walks attribute sets in lectic order. A visited set that is not
closed is a pseudo-intent and contributes one implication to the base.
"""

from trifca import l_closure, modified_next_closure, next_closure
from trifca import fixtures
from trifca.implications import transfer_base_delete

ctx = fixtures.six_attribute_context()
names = ctx.attributes

intents, base = next_closure(ctx)
print("intents:")
for b in intents:
    print("  {" + ",".join(names[i] for i in sorted(b)) + "}")
print("stem base:")
for imp in base:
    p, c = imp.names(names)
    print(f"  {{{','.join(p)}}} -> {{{','.join(c)}}}")

# the base is complete: closing under it gives the same sets as the context
x = ctx.attrs("1", "6")
print("closure of {1,6} under the base:", sorted(names[i] for i in l_closure(x, base)))

# deleting column 2 keeps part of the base for free
reduced = fixtures.six_attribute_context_deleted()
carried = transfer_base_delete(ctx, ctx.attrs("2"), base)
print("carried over after deleting 2:", [str(i) for i in carried])

# the rest is found by a walk that only derives closures it cannot look up
red_intents, red_base = next_closure(reduced)
again = modified_next_closure(reduced, red_intents, carried, validate=True)
assert again == red_base
print("reduced base has", len(red_base), "implications")
