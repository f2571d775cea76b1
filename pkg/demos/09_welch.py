# coding: utf-8

# # Welch's t-test
#
# Comparing two samples without assuming equal variances. The p-value
# comes from a regularized incomplete beta function, so numpy is the only
# dependency.

# In[1]:

import numpy as np

from bientropy.sequences import champernowne, encode_half, sectioned_analysis
from bientropy.stats import welch_test


# In[2]:

print(welch_test([1, 2, 3, 4, 5], [2, 3, 4, 5, 6]).to_dict())


# Section scores from two alignments of the same digit stream:

# In[3]:

a = sectioned_analysis(encode_half(champernowne(32000, True)), 32, 1000).scores
b = sectioned_analysis(encode_half(champernowne(32000, False)), 32, 1000).scores
print(welch_test(a, b).to_dict())


# Two halves of one normal sample should not differ:

# In[4]:

rng = np.random.default_rng(1)
x = rng.normal(0.7, 0.3, 200)
print(welch_test(x[:100], x[100:]).to_dict())
