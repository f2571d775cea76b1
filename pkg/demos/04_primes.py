# coding: utf-8

# # Prime encodings
#
# BEP marks each natural number from 2 upward with 1 if it is prime.
# PENNI does the same starting at 0. Neither sequence has an even-length
# prefix (beyond the trivial "11") that repeats exactly.

# In[1]:

from bientropy.sequences import bep, check_nonperiodicity, penni, prefix_curve


# In[2]:

print("bep  ", bep(18))
print("penni", penni(16))


# The TBiEn of growing prefixes climbs towards 1, with a shallow dip early on:

# In[3]:

curve = dict(prefix_curve("bep", 512))
low = min(range(64, 513), key=curve.get)
print("minimum at n =", low, "score", round(curve[low], 4))
for n in (16, 64, 128, 256, 512):
    print(n, round(curve[n], 4))


# Checking every even prefix up to 2048 bits for exact periodicity:

# In[4]:

for name in ("bep", "penni"):
    print(name, "violations:", check_nonperiodicity(name, 2048))
