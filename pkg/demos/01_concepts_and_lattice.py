"""
Concepts of a small cross table
===============================

Three people, three careers. Every concept is a maximal block of crosses;
ordering them by extent inclusion gives the concept lattice.
"""

from trifca import all_concepts_bruteforce, concept_lattice, export_dot
from trifca import fixtures

people = fixtures.individuals_careers()
for g, row in zip(people.objects, people.rows):
    print(f"{g:6}", "".join("X" if row >> m & 1 else "." for m in range(people.n_attributes)))

# derivation in both directions
jack = people.objs("Jack")
print("Jack has:", people.attribute_names(people.attrs("Student")))

# the lattice lists concepts top first; node ids are stable between runs
lattice = concept_lattice(people)
for i, c in enumerate(lattice.concepts):
    ext, itt = c.describe()
    print(i, ext, itt)
print("cover edges:", lattice.edges)

# the brute-force oracle closes every attribute subset and must agree
assert set(lattice.concepts) == all_concepts_bruteforce(people)

# reduced labelling: each name appears once, on its own concept
print(export_dot(lattice))

careers = fixtures.careers_locations()
print(len(concept_lattice(careers).concepts), "concepts for careers x locations")
