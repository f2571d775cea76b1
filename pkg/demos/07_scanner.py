# coding: utf-8

# # Scanning files in 1024-bit windows
#
# The scanner reads raw bytes MSB first, cuts them into non-overlapping
# windows and scores each window with TBiEn. Random data sits just
# under 1. Constant data scores 0.

# In[1]:

import hashlib

from bientropy.scanner import scan_bytes


def keystream(nbytes, seed=b"demo"):
    out = bytearray()
    i = 0
    while len(out) < nbytes:
        out += hashlib.sha256(seed + i.to_bytes(8, "big")).digest()
        i += 1
    return bytes(out[:nbytes])


# In[2]:

rand = scan_bytes(keystream(128_000))
zero = scan_bytes(bytes(128_000))
print("random", round(rand.stats.mean, 4), round(rand.stats.stdev, 4))
print("zeros ", zero.stats.mean, zero.stats.stdev)


# Mixed content shows up as windows that break from the random baseline:

# In[3]:

data = keystream(64_000) + b"A" * 1280 + keystream(64_000, b"more")
r = scan_bytes(data)
low = [(off, round(s, 3)) for off, s in r.windows if s < 0.9]
print(len(r.windows), "windows; low ones:", low, "tail bits:", r.truncated_tail_bits)
