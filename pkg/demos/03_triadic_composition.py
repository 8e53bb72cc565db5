"""
From two tables to one triadic context
======================================

People have careers and careers have locations. Composing the two gives a
relation "person has career at location"; its tri-concepts are maximal
boxes person x career x location.
"""

from trifca import all_tri_concepts, compose, geometric_structure, i_derive, quotient_order
from trifca import fixtures

model = fixtures.career_model(short_names=True)
K = compose(model)
print("triples:", K.named_triples())

# what does c relate to, as (attribute, condition) pairs?
pairs = i_derive(K, 1, K.indices(1, "c"))
print("c:", sorted((K.attributes[m], K.conditions[b]) for m, b in pairs))

concepts = all_tri_concepts(K)
for i, c in enumerate(concepts):
    print(i, *c.names(K))

# group by each component; the modus order is one of the three diagrams
modi = quotient_order(concepts, 3)
for comp, members in modi.classes:
    print(sorted(K.conditions[b] for b in comp), "<-", members)
print("cover edges:", modi.edges)

geo = geometric_structure(concepts)
print({axis: len(classes) for axis, classes in geo.partitions.items()}, "classes per axis")
