"""
How back-off smoothing spreads probability
==========================================

Every estimate mixes the most specific count table with progressively
coarser ones.  The mixing weight lambda is computed from the context's
own counts: frequent, low-variety contexts trust themselves; sparse,
high-variety contexts push mass down the chain.
"""

from namefinder import (
    CountTables,
    NOT_A_NAME,
    Token,
    lambda_weight,
    p_next_word_from,
)

# Four observations of words following "come" inside NOT-A-NAME text:
# "here" three times and "hither" once.
tables = CountTables()
context = ("come", "lowerCase", NOT_A_NAME)
tables.word_bigrams.add(context, Token("here", "lowerCase"), 3)
tables.word_bigrams.add(context, Token("hither", "lowerCase"), 1)

c = tables.word_bigrams.total(context)
unique = tables.word_bigrams.unique(context)
lam = lambda_weight(c, 0, unique)
print("context count c = %d, unique outcomes = %d" % (c, unique))
print("lambda = %.6f (trust in the bigram counts)" % lam)
print("1 - lambda = %.6f (passed to the back-off level)" % (1 - lam))
print()

# The smoothed estimate for each word mixes the bigram's relative
# frequency with whatever the coarser levels say.
vocab_size = 10
come = Token("come", "lowerCase")
for word in ("here", "hither", "never-seen"):
    p = p_next_word_from(tables, Token(word, "lowerCase"), come,
                         NOT_A_NAME, vocab_size)
    print("p(%-10s | come, NOT-A-NAME) = %.6f" % (word, p))
print()

# A context with no counts at all has lambda 0 and falls straight
# through to the uniform floor.
p = p_next_word_from(tables, Token("here", "lowerCase"),
                     Token("go", "lowerCase"), NOT_A_NAME, vocab_size)
print("unseen context 'go': p = %.6f = 1/(vocab * 14) = %.6f"
      % (p, 1 / (vocab_size * 14)))

# More data in a context raises lambda; more variety lowers it.
print()
print("lambda as counts grow (2 unique outcomes):")
for c in (2, 4, 8, 32, 128):
    print("  c = %3d -> lambda = %.4f" % (c, lambda_weight(c, 0, 2)))
print("lambda as variety grows (c = 16):")
for unique in (1, 2, 4, 8, 16):
    print("  unique = %2d -> lambda = %.4f" % (unique,
          lambda_weight(16, 0, unique)))
