# coding: utf-8

# # Bit strings, binary derivatives and periodicity
#
# A `BitString` is an immutable run of bits stored in a Python int, first
# bit most significant. The binary derivative XORs neighbouring bits and
# is one bit shorter than its input.

# In[1]:

from bientropy import BitString, parse_bits
from bientropy.bitstring import classify, derivatives, find_eventual_period, find_period


# Parsing ignores whitespace, so long strings can be grouped for reading.

# In[2]:

s = parse_bits("1011")
print(s, len(s), list(s))
print(parse_bits("0011 0101 1100") == parse_bits("001101011100"))


# Every derivative, down to a single bit:

# In[3]:

for k, d in enumerate(derivatives(s), start=1):
    print(f"d{k}: {d}")


# The last derivative decides whether a string is aperiodic. When it is
# 0 the string is either periodic (it repeats exactly with a period that
# divides its length) or in between, which is called nperiodic.

# In[4]:

for text in ["0101", "0110", "0001", "00010001", "00011111"]:
    b = parse_bits(text)
    r = classify(b)
    print(f"{text:>9}  class={r.cls:<10} period={find_period(b)}  eventual={find_eventual_period(b)}")


# Counting classes over all 8-bit strings:

# In[5]:

from collections import Counter

print(Counter(classify(BitString(v, 8), evidence=False).cls for v in range(256)))
