"""Synthetic annotated-corpus generator for end-to-end evaluation.

Real MUC-style corpora are licensed, so experiments run on generated
text with strong but stochastic cues: title words before persons,
corporate suffixes closing organization names, prepositions before
locations, and numeric shapes for dates, money, percentages and times.
Names are drawn from pools large enough that small training fractions
miss some vocabulary, which is what gives learning curves their slope;
a fraction of person mentions appear bare (no title) so word identity
carries weight too.

Every generated token is stable under the tokenizer and every sentence
ends with a terminal token, so emitted documents parse back exactly.
"""

import random

from .corpus import (
    DATE,
    LOCATION,
    MONEY,
    ORGANIZATION,
    PERCENT,
    PERSON,
    AnnotatedSentence,
    Region,
    TIME,
)

_FIRST_NAMES = [
    "Adam", "Alice", "Andrew", "Anna", "Anthony", "Barbara", "Benjamin",
    "Brian", "Carol", "Charles", "Christine", "Daniel", "David", "Diana",
    "Donald", "Edward", "Elaine", "Eric", "Frank", "George", "Gloria",
    "Harold", "Helen", "Henry", "Irene", "Jacob", "James", "Janet",
    "Jeffrey", "John", "Joseph", "Karen", "Kenneth", "Laura", "Lawrence",
    "Linda", "Margaret", "Maria", "Martin", "Mary", "Michael", "Nancy",
    "Nathan", "Oliver", "Pamela", "Patrick", "Paul", "Peter", "Rachel",
    "Raymond", "Richard", "Robert", "Ronald", "Samuel", "Sandra", "Sarah",
    "Stephen", "Susan", "Thomas", "Victor", "Walter", "William",
]
_SURNAMES = [
    "Abbott", "Acker", "Adler", "Albright", "Archer", "Bailey", "Barker",
    "Barnes", "Baxter", "Becker", "Bennett", "Bishop", "Blackwell", "Bowman",
    "Bradley", "Brennan", "Briggs", "Brooks", "Browning", "Buckley",
    "Burgess", "Cameron", "Carlisle", "Carver", "Chandler", "Clifford",
    "Colby", "Coleman", "Conway", "Cooper", "Crawford", "Cromwell", "Dalton",
    "Dawson", "Decker", "Donovan", "Draper", "Dudley", "Duncan", "Eastman",
    "Ellison", "Emerson", "Fairbanks", "Farley", "Fenton", "Fischer",
    "Fleming", "Fletcher", "Forbes", "Foster", "Franklin", "Fraser",
    "Gardner", "Garrison", "Gibson", "Gilbert", "Goodwin", "Granger",
    "Greenwood", "Griffin", "Hale", "Hammond", "Hancock", "Hargrove",
    "Harmon", "Harper", "Hawkins", "Hayden", "Henderson", "Hendricks",
    "Holbrook", "Holt", "Hopkins", "Horton", "Howell", "Hubbard", "Hudson",
    "Huffman", "Ingram", "Jarvis", "Jenkins", "Jennings", "Keating",
    "Keller", "Kendall", "Kingsley", "Lambert", "Landon", "Langley",
    "Larkin", "Lockhart", "Lowell", "Mercer", "Merritt", "Monroe",
    "Montgomery", "Morrison", "Mortimer", "Norwood", "Osborne", "Palmer",
    "Parsons", "Pemberton", "Pickett", "Porter", "Prescott", "Preston",
    "Quimby", "Radcliffe", "Ramsey", "Randall", "Redmond", "Reeves",
    "Rhodes", "Ridley", "Rockwell", "Rogers", "Rutherford", "Sanders",
    "Sawyer", "Schofield", "Sheffield", "Sheldon", "Sherman", "Simmons",
    "Sinclair", "Slater", "Spencer", "Stafford", "Stanton", "Sterling",
    "Stoddard", "Sullivan", "Sutton", "Talbot", "Tanner", "Thatcher",
    "Thornton", "Tilden", "Townsend", "Tucker", "Underwood", "Vance",
    "Wakefield", "Walsh", "Warner", "Watkins", "Webster", "Whitfield",
    "Whitman", "Wilcox", "Wilder", "Winslow", "Winthrop", "Woodruff",
    "Wyatt", "Yates",
]
_ORG_HEADS = [
    "Acme", "Allied", "Apex", "Atlas", "Beacon", "Cascade", "Centennial",
    "Citadel", "Clearwater", "Colonial", "Continental", "Crestview",
    "Crown", "Diamond", "Dominion", "Eagle", "Empire", "Evergreen",
    "Federal", "Frontier", "General", "Golden", "Granite", "Harbor",
    "Heritage", "Horizon", "Imperial", "Keystone", "Liberty", "Meridian",
    "Midland", "National", "Northern", "Pacific", "Paramount", "Pinnacle",
    "Pioneer", "Premier", "Prime", "Regal", "Sentinel", "Sierra",
    "Sovereign", "Sterling", "Summit", "Superior", "Transcontinental",
    "Union", "United", "Vanguard", "Western", "Zenith",
]
_ORG_NOUNS = [
    "Aerospace", "Airlines", "Bank", "Brands", "Broadcasting", "Capital",
    "Chemicals", "Communications", "Computing", "Construction", "Dynamics",
    "Electric", "Energy", "Engineering", "Financial", "Foods", "Freight",
    "Holdings", "Industries", "Instruments", "Insurance", "Logistics",
    "Machines", "Manufacturing", "Materials", "Media", "Mining", "Motors",
    "Networks", "Partners", "Petroleum", "Pharmaceuticals", "Plastics",
    "Publishing", "Railways", "Research", "Resources", "Semiconductors",
    "Shipping", "Software", "Steel", "Systems", "Technologies", "Textiles",
    "Trust", "Utilities", "Ventures",
]
_ORG_SUFFIXES = ["Corp.", "Inc.", "Co."]
_LOCATIONS = [
    "Aberdeen", "Albany", "Amsterdam", "Antwerp", "Ashford", "Athens",
    "Auckland", "Bangkok", "Barcelona", "Belfast", "Bergen", "Berlin",
    "Bombay", "Bordeaux", "Boston", "Bristol", "Brussels", "Budapest",
    "Cairo", "Calgary", "Caracas", "Cardiff", "Chicago", "Cleveland",
    "Cologne", "Copenhagen", "Dallas", "Denver", "Detroit", "Dresden",
    "Dublin", "Edinburgh", "Fairview", "Frankfurt", "Geneva", "Glasgow",
    "Gothenburg", "Hamburg", "Hartford", "Havana", "Helsinki", "Houston",
    "Istanbul", "Jakarta", "Kingston", "Lisbon", "Liverpool", "London",
    "Lyon", "Madrid", "Manchester", "Marseille", "Melbourne", "Milan",
    "Montreal", "Moscow", "Munich", "Nairobi", "Naples", "Newcastle",
    "Oakland", "Oslo", "Ottawa", "Paris", "Perth", "Phoenix", "Portland",
    "Prague", "Richmond", "Rotterdam", "Santiago", "Seattle", "Seville",
    "Singapore", "Stockholm", "Stuttgart", "Sydney", "Toledo", "Toronto",
    "Tucson", "Valencia", "Vancouver", "Vienna", "Warsaw", "Wellington",
    "Winnipeg", "Zurich",
]
# Words that name either a person or a place; only context disambiguates.
_AMBIGUOUS = [
    "Austin", "Chester", "Clinton", "Darwin", "Hamilton", "Jackson",
    "Lincoln", "Madison", "Sheridan", "Washington",
]
# Capitalized words that are not names; several overlap _ORG_HEADS so an
# organization reading is available and must be rejected from context.
_TOPICS = [
    "American", "Asian", "Atlantic", "British", "Canadian", "Christmas",
    "Congress", "Continental", "Democratic", "European", "Federal",
    "French", "German", "Internet", "Japanese", "Northern", "Olympic",
    "Pacific", "Parliament", "Republican", "Senate", "Treasury",
    "Western",
]
_TITLES = ["Mr.", "Mrs.", "Dr.", "President", "Senator", "Judge"]
_LOC_CUES = ["in", "at", "near", "from", "to"]
_DATE_CUES = ["on", "since", "until"]
_TIMES = ["9:15", "10:30", "11:45", "12:00", "14:20", "16:05", "18:30"]
_FILLER = [
    "the", "a", "its", "their", "new", "old", "large", "small", "annual",
    "quarterly", "report", "statement", "meeting", "agreement", "contract",
    "plan", "budget", "offer", "deal", "merger", "project", "proposal",
    "review", "market", "share", "price", "profit", "loss", "growth",
    "decline", "said", "told", "announced", "reported", "confirmed",
    "denied", "approved", "rejected", "signed", "filed", "opened",
    "closed", "raised", "lowered", "expected", "estimated", "completed",
    "yesterday", "today", "recently", "officials", "analysts", "sources",
    "investors", "regulators", "executives", "employees", "customers",
    "again", "also", "after", "before", "during", "while", "because",
    "despite", "according",
]
_OPENING = [
    "The", "A", "Officials", "Analysts", "Investors", "Regulators",
    "Sources", "Executives", "Shares", "Trading", "Negotiations",
    "Meanwhile", "Earlier", "Later", "Separately", "Overall",
]

_MENTION_WEIGHTS = [
    (PERSON, 25),
    (ORGANIZATION, 20),
    (LOCATION, 20),
    (DATE, 12),
    (MONEY, 10),
    (PERCENT, 8),
    (TIME, 5),
]

BARE_PERSON_RATE = 0.3
AMBIGUOUS_RATE = 0.08
TOPIC_RATE = 0.10


def _weighted_choice(rng, pairs):
    total = sum(weight for _, weight in pairs)
    roll = rng.randrange(total)
    for value, weight in pairs:
        roll -= weight
        if roll < 0:
            return value
    raise AssertionError("unreachable")


def _person(rng, tokens, regions):
    surname_pool = _AMBIGUOUS if rng.random() < AMBIGUOUS_RATE else _SURNAMES
    if rng.random() < BARE_PERSON_RATE:
        start = len(tokens)
        tokens.append(rng.choice(surname_pool))
        regions.append(Region(start, start + 1, PERSON))
    else:
        tokens.append(rng.choice(_TITLES))
        start = len(tokens)
        tokens.append(rng.choice(_FIRST_NAMES))
        tokens.append(rng.choice(surname_pool))
        regions.append(Region(start, start + 2, PERSON))


def _organization(rng, tokens, regions):
    start = len(tokens)
    tokens.append(rng.choice(_ORG_HEADS))
    tokens.append(rng.choice(_ORG_NOUNS))
    tokens.append(rng.choice(_ORG_SUFFIXES))
    regions.append(Region(start, start + 3, ORGANIZATION))


def _location(rng, tokens, regions):
    tokens.append(rng.choice(_LOC_CUES))
    pool = _AMBIGUOUS if rng.random() < AMBIGUOUS_RATE else _LOCATIONS
    start = len(tokens)
    tokens.append(rng.choice(pool))
    regions.append(Region(start, start + 1, LOCATION))


def _date(rng, tokens, regions):
    if rng.random() < 0.5:
        tokens.append(rng.choice(_DATE_CUES))
    start = len(tokens)
    if rng.random() < 0.6:
        tokens.append("%d/%d/%02d" % (rng.randint(1, 12), rng.randint(1, 28),
                                      rng.randint(70, 99)))
    else:
        tokens.append("%d" % rng.randint(1970, 1999))
    regions.append(Region(start, start + 1, DATE))


def _money(rng, tokens, regions):
    start = len(tokens)
    if rng.random() < 0.5:
        tokens.append("$%d,%03d" % (rng.randint(1, 999), rng.randrange(1000)))
    else:
        tokens.append("$%d,%03d,%03d" % (rng.randint(1, 99), rng.randrange(1000),
                                         rng.randrange(1000)))
    regions.append(Region(start, start + 1, MONEY))


def _percent(rng, tokens, regions):
    start = len(tokens)
    tokens.append("%d.%d%%" % (rng.randint(0, 99), rng.randint(0, 9)))
    regions.append(Region(start, start + 1, PERCENT))


def _time(rng, tokens, regions):
    start = len(tokens)
    tokens.append(rng.choice(_TIMES))
    regions.append(Region(start, start + 1, TIME))


_MAKERS = {
    PERSON: _person,
    ORGANIZATION: _organization,
    LOCATION: _location,
    DATE: _date,
    MONEY: _money,
    PERCENT: _percent,
    TIME: _time,
}


def _filler_run(rng, tokens, low, high):
    for _ in range(rng.randint(low, high)):
        if rng.random() < TOPIC_RATE:
            tokens.append(rng.choice(_TOPICS))
        else:
            tokens.append(rng.choice(_FILLER))


def generate_sentence(rng: random.Random) -> AnnotatedSentence:
    tokens = [rng.choice(_OPENING)]
    regions = []
    _filler_run(rng, tokens, 1, 3)
    for i in range(rng.randint(1, 3)):
        if i > 0:
            tokens.append(",")
            _filler_run(rng, tokens, 1, 3)
        _MAKERS[_weighted_choice(rng, _MENTION_WEIGHTS)](rng, tokens, regions)
        _filler_run(rng, tokens, 1, 4)
    tokens.append(".")
    return AnnotatedSentence(tokens, regions).validate()


def generate_corpus(n_sentences: int, seed: int) -> list:
    """n_sentences independent sentences from a seeded generator."""
    rng = random.Random(seed)
    return [generate_sentence(rng) for _ in range(n_sentences)]
