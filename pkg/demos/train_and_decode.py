"""
Training a name-finder and decoding new text
============================================

The model learns from inline-annotated text where name regions are
wrapped in ENAMEX/TIMEX/NUMEX tags.  Decoding picks the most likely
sequence of name classes for each sentence and emits the same markup.
"""

from namefinder import Decoder, emit_annotated, parse_annotated, train

annotated = """\
<ENAMEX TYPE="PERSON">Alice Tanner</ENAMEX> leads <ENAMEX TYPE="ORGANIZATION">Acme Systems Inc.</ENAMEX> .
<ENAMEX TYPE="ORGANIZATION">Acme Systems Inc.</ENAMEX> is based in <ENAMEX TYPE="LOCATION">Boston</ENAMEX> .
<ENAMEX TYPE="PERSON">Alice Tanner</ENAMEX> visited <ENAMEX TYPE="LOCATION">Boston</ENAMEX> on <TIMEX TYPE="DATE">11/9/89</TIMEX> .
The firm paid <NUMEX TYPE="MONEY">$ 1,300</NUMEX> for the trip .
<ENAMEX TYPE="PERSON">Bob Tanner</ENAMEX> also works at <ENAMEX TYPE="ORGANIZATION">Acme Systems Inc.</ENAMEX> .
The trip began at <TIMEX TYPE="TIME">10:30</TIMEX> .
Alice said the plan was fine .
The plan was approved yesterday .
"""

corpus = parse_annotated(annotated)
print("training sentences:", len(corpus))

model = train(corpus)
print("vocabulary size:", len(model.vocabulary))
print()

# Decode text the model has never seen.  "Carol Tanner" is new, but the
# surname and the sentence shape carry it into PERSON.
text = "Carol Tanner flew to Boston on 11/9/89 . The plan was fine ."

decoder = Decoder(model)
results = decoder.decode_document(text)
for result in results:
    print("tokens: ", " ".join(result.sentence.tokens))
    print("classes:", " ".join(result.path_classes))
    print("regions:", result.sentence.regions)
    print()

print(emit_annotated([r.sentence for r in results]), end="")
