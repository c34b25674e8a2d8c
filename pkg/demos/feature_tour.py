"""
A tour of the fourteen word features
====================================

Every token is mapped to exactly one feature class by ordered
predicates: the first test that fires wins.  The feature carries the
information capitalization and digit patterns give a reader, which
matters most for words the trained model has never seen.
"""

from namefinder import WORD_FEATURES, FeatureConfig, compute_feature

words = [
    "90", "1990", "A8956-67", "09-96", "11/9/89", "23,000.00", "1.00",
    "456789", "BBN", "M.", "Sally", "can", ",", "$",
]

print("feature classes:", ", ".join(WORD_FEATURES))
print()

# Mid-sentence classification.
for word in words:
    print("%12s -> %s" % (word, compute_feature(word)))
print()

# At the start of a sentence capitalization is uninformative, so a
# capitalized word drops to firstWord instead of initCap.
for word in ("Sally", "BBN", "can"):
    print("%12s as first word -> %s" % (word,
          compute_feature(word, is_first_word=True)))
print()

# Numbers written in the European style exchange the roles of comma
# and period.
swapped = FeatureConfig(swap_comma_period=True)
for word in ("23.000,00", "1,00"):
    print("%12s with swapped separators -> %s" % (word,
          compute_feature(word, config=swapped)))
