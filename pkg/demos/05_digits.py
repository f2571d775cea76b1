# coding: utf-8

# # Digit expansions in sections
#
# Decimal expansions become bits either one per digit (5-9 -> 1) or via a
# 3-bit octal code. The bits are then cut into non-overlapping sections and
# each section is scored.

# In[1]:

from bientropy.sequences import champernowne, encode_half, encode_octal, sectioned_analysis


# Champernowne's constant 0.123456789101112... is generated on demand.
# Counting the leading 0 as the first digit matters for alignment.

# In[2]:

for with_int in (True, False):
    d = champernowne(32000, integer_part=with_int)
    r = sectioned_analysis(encode_half(d), 32, 1000, "bien")
    print(d.source_label, round(r.stats.mean, 4), round(r.stats.stdev, 4))


# The running mean settles after a few hundred sections:

# In[3]:

r = sectioned_analysis(encode_half(champernowne(32000, integer_part=True)), 32, 1000)
print([round(float(r.running_mean[i]), 4) for i in (9, 99, 499, 999)])


# Octal encoding of the same digits, scored with tbien on 64-bit sections:

# In[4]:

bits = encode_octal(champernowne(30000, integer_part=True))
print(round(sectioned_analysis(bits, 64, 1000, "tbien").stats.mean, 4))
