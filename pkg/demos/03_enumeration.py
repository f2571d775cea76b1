# coding: utf-8

# # Scoring every string of a given length
#
# `enumerate_strings` scores and classifies all 2^n strings with the
# vectorized kernel, then summarizes them.

# In[1]:

from bientropy.enumeration import ascending_dump, enumerate_strings, histogram


# In[2]:

for n in (4, 8):
    t = enumerate_strings(n)
    print(n, {m: (round(s.mean, 4), round(s.stdev, 4)) for m, s in t.stats.items()},
          t.class_counts, "adjR2", round(t.adjusted_r2, 4))


# The most ordered and least ordered 8-bit strings:

# In[3]:

t8 = enumerate_strings(8)
order = ascending_dump(t8, "bien")
print([format(v, "08b") for v, _ in order[:6]])
print([format(v, "08b") for v, _ in order[-6:]])


# A histogram in steps of 0.1. Aperiodic strings fill the top bin.

# In[4]:

for lower, count in histogram(t8, "bien", 0.1):
    print(f"[{lower:.1f}, {lower + 0.1:.1f})  {'#' * (count // 4)} {count}")


# Twenty-bit tables take about a second:

# In[5]:

t20 = enumerate_strings(20, threads=4)
print(t20.class_counts, round(t20.stats["tbien"].mean, 4))
