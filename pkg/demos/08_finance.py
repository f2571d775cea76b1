# coding: utf-8

# # Binarized price changes and decile returns
#
# Daily price changes larger than a threshold R become 1s. For random
# (start day, ticker, holding length) samples, B is the TBiEn of the 32
# bits that begin at the start day and H is the holding return. The report
# compares the holding returns of the top and bottom tenth of samples by B.

# In[1]:

from bientropy.finance import planted_prices, planted_spread, run_pipeline, threshold_transform


# Synthetic data: 8 of 40 tickers jitter above the threshold and drift up
# about 4% per average holding period. The rest move too little to set any
# bit.

# In[2]:

P = planted_prices(seed=0)
T = threshold_transform(P, 0.01)
print(P.shape, "sparsity", round(T.sparsity, 4))


# In[3]:

report = run_pipeline(P, 0.01, samples=1000, seed=0)
print(report.to_dict())
print("spread", round(report.spread, 4), "planted", round(planted_spread(), 4))


# Averaging over seeds tightens the estimate:

# In[4]:

spreads = [run_pipeline(planted_prices(seed=s), 0.01, 1000, seed=s).spread for s in range(10)]
print(round(sum(spreads) / len(spreads), 4))
