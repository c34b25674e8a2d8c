"""
Performance versus training-set size
====================================

Train on shrinking prefixes of a synthetic annotated corpus and score
each model on the same held-out test set.  F-measure degrades slowly:
halving the data costs almost nothing, and even an eighth of it stays
close.
"""

from fractions import Fraction

from namefinder import Decoder, generate_corpus, score, train

corpus = generate_corpus(3000, seed=7)
training, test = corpus[:2400], corpus[2400:]
print("training sentences: %d, test sentences: %d" % (len(training),
                                                      len(test)))
print()
print("fraction  sentences  precision  recall  F")

for fraction in (Fraction(1), Fraction(1, 2), Fraction(1, 4),
                 Fraction(1, 8), Fraction(1, 16)):
    k = int(fraction * len(training) + Fraction(1, 2))
    model = train(training[:k])
    decoder = Decoder(model)
    response = [decoder.decode_sentence(s.tokens).sentence for s in test]
    overall = score(test, response).overall
    print("%8s  %9d  %9.3f  %6.3f  %.3f"
          % (fraction, k, overall.precision, overall.recall,
             overall.f_measure))
