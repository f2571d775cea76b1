# coding: utf-8

# # BiEntropy of single strings
#
# BiEntropy averages the Shannon entropy of a string and of its
# derivatives. `bien` weights derivative k by 2^k, so the late, short
# derivatives dominate; `tbien` uses the gentler log2(k+2) weights and is
# the one to use for long strings.

# In[1]:

from bientropy import bien, entropy_profile, parse_bits, tbien
from bientropy.entropy import WeightingScheme


# The profile shows where the score comes from:

# In[2]:

prof = entropy_profile(parse_bits("1011"), WeightingScheme.POWER_LAW)
for row in prof.rows:
    print(f"k={row.k}  p={row.p:.3f}  H={row.h:.3f}  weight={row.weight:g}")
print("score", round(prof.score, 4))


# Ordered strings score low, irregular ones high:

# In[3]:

for text in ["00000000", "01010101", "00110011", "00010111", "01101011"]:
    b = parse_bits(text)
    print(f"{text}  bien={bien(b):.4f}  tbien={tbien(b):.4f}")


# Scores survive complementing and reversing the string:

# In[4]:

b = parse_bits("0010111011")
print(bien(b), bien(~b), bien(parse_bits(str(b)[::-1])))


# For whole batches, the packed kernel scores every row of a 0/1 array at
# once. It handles thousands of bits per row.

# In[5]:

import numpy as np
from bientropy.entropy import tbien_many

rng = np.random.default_rng(0)
rows = rng.integers(0, 2, size=(5, 2048), dtype=np.uint8)
print(tbien_many(rows).round(4))
