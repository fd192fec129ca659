#!/usr/bin/env python3
# Copyright 2026 The Convoref Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the extraction benchmark corpus.

Writes conversational utterances, one per line, built from templates and
the entries of the bundled gazetteer. The output is a pure function of the
seed, so the committed corpus can be regenerated byte for byte.
"""

import argparse
import pathlib
import random

TEMPLATES = [
    "I think {person} said the meeting with {org} moved to {date}.",
    "We drove from {loc} to {loc2} and stopped for coffee on the way.",
    "Did you read that {org} is opening a new office in {loc}?",
    "My sister visited {loc} {date} and loved the food there.",
    "{person} told me the project budget is about {num} dollars now.",
    "Honestly the weather in {loc} was terrible the whole week.",
    "The report from {org} says sales grew by {num} percent this quarter.",
    "Have you ever met {person}? They used to work at {org}.",
    "Let's schedule the review for {date} after the team lunch.",
    "The museum near {loc} has a great exhibition about modern art.",
    "I was reading about {person} and the history of {loc} last night.",
    "Our flight to {loc} leaves {date}, so pack light this time.",
    "The engineers at {org} and {org2} are working on the same problem.",
    "We should ask {person} whether the train to {loc2} is faster.",
    "That new phone from {org} costs almost {num} dollars, which is crazy.",
    "There is a small bakery in {loc} that makes amazing bread.",
    "My friend moved to {loc} for a job at {org} {date}.",
    "The conference in {loc} had about {num} people attending every day.",
    "I remember {person} giving a talk about climate research and oceans.",
    "So the plan is dinner first, then a walk along the river in {loc}.",
    "Apparently {org} bought a startup from {loc2} for {num} million.",
    "We watched a documentary about {person} and the early days of flight.",
    "Can you send me the notes from the call with {org} {date}?",
    "The hotel in {loc} was cheap but the beds were really comfortable.",
    "I would love to hike in the mountains near {loc} sometime.",
]

DATES = [
    "next week", "last Friday", "tomorrow", "next spring", "last summer",
    "in March", "on Monday", "this weekend", "next month", "in 2027",
    "last year", "on Thursday", "in early June", "next winter",
]


def load_gazetteer(path):
    sections = {}
    current = None
    for raw in pathlib.Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            sections.setdefault(current, [])
        elif current:
            sections[current].append(line)
    return sections


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--gazetteer", default="data/gazetteer.txt")
    parser.add_argument("--words", type=int, default=52000)
    parser.add_argument("--seed", type=int, default=684)
    parser.add_argument("--output", default="data/corpus/bench.txt")
    args = parser.parse_args()

    gaz = load_gazetteer(args.gazetteer)
    rng = random.Random(args.seed)
    lines = []
    words = 0
    while words < args.words:
        template = rng.choice(TEMPLATES)
        line = template.format(
            person=rng.choice(gaz["person"]),
            org=rng.choice(gaz["organization"]),
            org2=rng.choice(gaz["organization"]),
            loc=rng.choice(gaz["location"]),
            loc2=rng.choice(gaz["location"]),
            date=rng.choice(DATES),
            num=rng.choice(["twelve", "forty", "3", "250", "1,200", "ninety"]),
        )
        lines.append(line)
        words += len(line.split())
    out = pathlib.Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} utterances, {words} words to {out}")


if __name__ == "__main__":
    main()
