"""Regenerates the two 20-document toy corpora used by the end-to-end tests.
Titles draw on two topic vocabularies per corpus with "leadership" shared
across topics, so the title networks have a planted bridge keyword."""
import csv
import pathlib
import random

here = pathlib.Path(__file__).parent

TOPICS = {
    "alpha": [
        ["team", "performance", "goals", "feedback", "motivation", "employees"],
        ["firm", "strategy", "innovation", "markets", "capabilities", "growth"],
    ],
    "beta": [
        ["public", "policy", "education", "students", "quality", "schools"],
        ["tourism", "regional", "development", "local", "economy", "sustainable"],
    ],
}
BRIDGE = {"alpha": "leadership", "beta": "management"}
FILLER = ["the", "of", "and", "in", "for", "a"]

SENTENCES = [
    "We examine how {a} shapes {b} across {n} organizations.",
    "Results show that {a} and {b} are strongly related.",
    "The study uses survey data from {n} respondents in {y}.",
    "Implications for {a} research are discussed.",
    "Our analysis reveals unexpected effects of {b} on {a}!",
    "Does {a} really matter for {b}?",
    "Prior work, e.g. field studies, offers mixed evidence on {b}.",
    "We find a {p}% increase in {a} after the intervention.",
]


def corpus(name, seed):
    rng = random.Random(seed)
    rows = []
    for i in range(20):
        topic = TOPICS[name][i % 2]
        words = rng.sample(topic, rng.randint(2, 4))
        if i % 3 == 0:
            words.insert(rng.randint(0, len(words)), BRIDGE[name])
        title_words = []
        for w in words:
            title_words.append(w)
            if rng.random() < 0.3:
                title_words.append(rng.choice(FILLER))
        title = " ".join(title_words).capitalize()
        if name == "alpha" and i % 4 == 1:
            title += ": evidence from " + rng.choice(["field data", "a panel study", "two experiments"])
        n_sent = rng.randint(2, 5)
        abstract = " ".join(
            rng.choice(SENTENCES).format(
                a=rng.choice(topic), b=rng.choice(topic), n=rng.randint(20, 900), y=rng.randint(2010, 2019),
                p=rng.randint(2, 40))
            for _ in range(n_sent))
        if i == 7:
            abstract = ""
        rows.append({
            "EID": f"{name[0].upper()}-{i + 1:03d}",
            "Title": title,
            "Abstract": abstract,
            "Year": str(2010 + (i * 7 + seed) % 10),
            "Source title": "Alpha Review" if name == "alpha" else "Beta Letters",
            "Cited by": str(rng.randint(0, 300) if name == "alpha" else rng.randint(0, 15)),
            "Author count": str(rng.randint(1, 5)),
        })
    return rows


for name, seed in (("alpha", 11), ("beta", 23)):
    rows = corpus(name, seed)
    with open(here / f"{name}.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.DictWriter(f, fieldnames=list(rows[0].keys()))
        w.writeheader()
        w.writerows(rows)
