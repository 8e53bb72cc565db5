"""
Recovering the input lattices from the triadic one
==================================================

Extents of the composed context match the extents of the first table once
some meta-attribute holds for every attribute and no object has every
attribute. The dual conditions do the same for modi. The two sets of
requirements cannot hold at once, so each check gets its own padding.
"""

from trifca import pad_for_extent_iso, pad_for_modus_iso, verify_extent_iso, verify_modus_iso
from trifca import fixtures
from trifca.meta import extent_iso_preconditions, modus_iso_preconditions, strip_padding

model = fixtures.career_model()
print("extent check before padding:", verify_extent_iso(model).status)
print("modus check before padding: ", verify_modus_iso(model).status)

ext_model, ext_report = pad_for_extent_iso(model)
print("extent padding:", ext_report)
print("extent check after padding:", verify_extent_iso(ext_model).status)

mod_model, mod_report = pad_for_modus_iso(model)
print("modus padding:", mod_report)
print("modus check after padding:", verify_modus_iso(mod_model).status)

# each padded model still fails the other check's preconditions
print("extent-padded, modus problems:", modus_iso_preconditions(ext_model))
print("modus-padded, extent problems:", extent_iso_preconditions(mod_model))

# padding is recorded, so it can be undone
assert strip_padding(ext_model, ext_report) == model
assert strip_padding(mod_model, mod_report) == model
