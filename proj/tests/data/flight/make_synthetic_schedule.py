"""Writes synthetic_schedule.txt: a 6-city stand-in for the canonical schedule.

Same shape as the original dataset (each origin <-> LGA, 10 flights per
direction, ORG,DST,H:MM,H:MM,PRICE lines) but with made-up times and prices.
Deterministic: rerunning produces the same file.
"""
import random
from pathlib import Path

ORIGINS = ["BOS", "DAL", "CAK", "MIA", "ORD", "OMA"]
DEST = "LGA"
FLIGHTS_PER_LEG = 10


def clock(minutes):
    return f"{minutes // 60}:{minutes % 60:02d}"


def leg(rng, origin, dest):
    departures = sorted(rng.sample(range(6 * 60, 21 * 60, 5), FLIGHTS_PER_LEG))
    rows = []
    for dep in departures:
        duration = rng.randrange(75, 5 * 60, 5)
        arr = min(dep + duration, 23 * 60 + 59)
        price = rng.randrange(60, 500)
        rows.append(f"{origin},{dest},{clock(dep)},{clock(arr)},{price}")
    return rows


def main():
    rng = random.Random(20211201)
    lines = [
        "# Synthetic 6-city flight schedule (NOT the canonical dataset).",
        "# Generated by make_synthetic_schedule.py; format ORG,DST,H:MM,H:MM,PRICE.",
    ]
    for origin in ORIGINS:
        lines += leg(rng, origin, DEST)
        lines += leg(rng, DEST, origin)
    out = Path(__file__).with_name("synthetic_schedule.txt")
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
