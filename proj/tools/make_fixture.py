#!/usr/bin/env python3
"""Regenerates data/tweets_200.csv, the seeded synthetic corpus used by the
pipeline tests. Output is deterministic for a given --seed."""
import argparse
import csv
import datetime as dt
import random

POSITIVE = [
    "Drink a corona beer and stay happy",
    "Good news on the coronavirus cure",
    "Hope everyone stays safe from corona",
    "Corona beer fun tonight, cheers",
    "Thanks to the nurses fighting coronavirus, love and support",
    "Feeling calm and strong despite corona",
    "Great relief, my aunt will recover from covid",
    "Vaccine progress gives hope against coronavirus",
    "Stay healthy and safe, corona will not win",
    "Love my neighbors helping during corona",
]
NEGATIVE = [
    "Corona virus outbreak is scary, panic buying everywhere",
    "Stock market crash because of the corona virus outbreak",
    "Confirmed cases of corona virus rising, so much fear",
    "Corona lockdown is terrible and sad",
    "I worry about the deadly coronavirus",
    "Another death from corona virus, awful news",
    "Total chaos and panic over corona",
    "Scared of the corona virus outbreak in my city",
    "Corona crisis makes me angry",
    "So sick of this corona dread",
]
NEUTRAL = [
    "Corona virus update from the county office",
    "Reading about corona in the news",
    "New coronavirus numbers posted today",
    "Corona virus outbreak map updated",
]
OFF_TOPIC = [
    "Flu season is bad this year",
    "Watching the game tonight with friends",
    "Beer tasting downtown this weekend",
]
FILLERS = [
    " according to the latest reports from local officials this week",
    " and everyone at work keeps talking about it over lunch",
    " while the schools decide what to do next month",
]
ABUSIVE = ["stupid", "idiot", "crap", "moron"]
MENTIONS = ["@CNN", "@realDonaldTrump", "@WHO", "@CDCgov", "@nytimes"]
HASHTAGS = ["#coronavirus", "#COVID19", "#StaySafe", "#beer", "#Trump"]
POLS = ["Trump", "Biden", "Pelosi"]
SOURCES = [("Twitter for iPhone", 6), ("Twitter for Android", 3), ("Twitter for iPad", 1), ("Twitter Web App", 1)]
LOCATIONS = [
    ("Los Angeles, CA", "Los Angeles, CA"),
    ("Manhattan, NY", "New York, NY"),
    ("Florida, USA", "Florida, USA"),
    ("Chicago, IL", "Chicago, IL"),
    ("Houston, TX", "Houston, TX"),
    ("", "Washington, DC"),
    ("", "United States"),
    ("Brooklyn, NY", ""),
    ("San Antonio, TX", "Corona, CA"),
]
START = dt.datetime(2020, 2, 20, tzinfo=dt.timezone.utc)
DAYS = 41


def weighted(rng, items):
    total = sum(w for _, w in items)
    r = rng.uniform(0, total)
    for value, w in items:
        r -= w
        if r <= 0:
            return value
    return items[-1][0]


def make_text(rng, day):
    fear_weight = 0.3 + 0.6 * day / DAYS
    kind = weighted(rng, [("pos", 1.0 - 0.4 * day / DAYS), ("neg", fear_weight), ("neu", 0.25), ("off", 0.12)])
    base = rng.choice({"pos": POSITIVE, "neg": NEGATIVE, "neu": NEUTRAL, "off": OFF_TOPIC}[kind])
    parts = [base]
    if rng.random() < 0.35:
        parts.append(rng.choice(FILLERS))
    if rng.random() < 0.3:
        parts.insert(0, rng.choice(MENTIONS) + " ")
    if rng.random() < 0.3:
        parts.append(" " + rng.choice(HASHTAGS))
    if rng.random() < 0.15:
        parts.append(" says " + rng.choice(POLS))
    if rng.random() < 0.12:
        parts.append(" what a " + rng.choice(ABUSIVE))
    if rng.random() < 0.2:
        parts.append(" https://t.co/" + "".join(rng.choice("abcdefghjk0123456789") for _ in range(8)))
    return "".join(parts)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=2020)
    ap.add_argument("--out", default="data/tweets_200.csv")
    args = ap.parse_args()
    rng = random.Random(args.seed)

    rows = []
    for i in range(197):
        day = rng.randrange(DAYS)
        ts = START + dt.timedelta(days=day, seconds=rng.randrange(86400))
        tagged, stated = rng.choice(LOCATIONS)
        country = "United States" if rng.random() < 0.93 else "Canada"
        rows.append({
            "id": str(1000 + i),
            "created_at": ts.strftime("%Y-%m-%dT%H:%M:%SZ"),
            "text": make_text(rng, day),
            "source": weighted(rng, SOURCES),
            "screen_name": "user%02d" % rng.randrange(40),
            "tagged_location": tagged,
            "stated_location": stated,
            "country": country,
            "state": "",
        })
    rows.sort(key=lambda r: (r["created_at"], r["id"]))
    # Rows exercising the parser: embedded comma and newline, empty text, bad timestamp.
    rows.insert(17, dict(rows[17], id="2001", text="Corona, again:\nstay safe and calm"))
    rows.insert(60, dict(rows[60], id="2002", text=""))
    rows.insert(120, dict(rows[120], id="2003", created_at="2020-13-45T99:00:00Z"))

    fields = ["id", "created_at", "text", "source", "screen_name", "tagged_location", "stated_location", "country",
              "state", "lang"]
    with open(args.out, "w", newline="", encoding="utf-8") as f:
        w = csv.DictWriter(f, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(dict(r, lang="en"))


if __name__ == "__main__":
    main()
