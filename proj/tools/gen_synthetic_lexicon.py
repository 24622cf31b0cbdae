#!/usr/bin/env python3
# gen_synthetic_lexicon.py
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
#
# Copyright 2026 The g2g Authors.
"""Writes a rule-generated homophone lexicon (written<TAB>X-SAMPA phones).

Each cluster is one random two-syllable phone string spelled three ways:
the conventional spelling of every phone, plus two respellings that each
swap one phone for a less usual spelling of the same sound. Output is
fully determined by --seed.
"""

import argparse
import random

# phone -> conventional spelling.
ONSETS = {
    "b": "b", "d": "d", "f": "f", "g": "g", "h": "h", "k": "k", "l": "l",
    "m": "m", "n": "n", "p": "p", "r\\": "r", "s": "s", "t": "t", "v": "v",
    "w": "w", "S": "sh", "tS": "ch", "dZ": "j",
}
VOWELS = {
    "{": "a", "E": "e", "I": "i", "A": "o", "V": "u", "i": "ee", "u": "oo",
    "oU": "oa", "eI": "ai",
}
CODAS = {"": "", "n": "n", "l": "l", "t": "t", "m": "m", "d": "d", "r\\": "r", "s": "s"}

# Respellings allowed at each kind of position. Only ones that an English
# letter model rates below the conventional spelling nearly always are kept
# (see data/README.md), so the conventional form is the expected root.
RESPELL = {
    "initial": {"ch": ["tsh"], "r": ["wr"], "j": ["dj"], "n": ["kn"]},
    "medial": {"ch": ["tsh"], "a": ["ah"], "e": ["eh"], "u": ["uh"], "r": ["rr"], "n": ["nn"]},
    "final": {"e": ["eh"], "m": ["mm"], "n": ["nn"], "r": ["rr"]},
}


def syllable(rng):
    return [rng.choice(sorted(ONSETS)), rng.choice(sorted(VOWELS)),
            rng.choice(sorted(CODAS))]


def slots(phones):
    """Spelling options for each position of a word, conventional first."""
    spelled = [(ONSETS, VOWELS, CODAS)[i % 3][p] for i, p in enumerate(phones)]
    last = max(i for i, s in enumerate(spelled) if s)
    out = []
    for i, s in enumerate(spelled):
        kind = "initial" if i == 0 else "final" if i == last else "medial"
        # Mid-word, onsets only take "tsh" and codas only double.
        alts = RESPELL[kind].get(s, []) if s else []
        if i % 3 == 0 and kind == "medial":
            alts = [a for a in alts if a == "tsh"]
        if i % 3 == 2 and kind == "medial":
            alts = [a for a in alts if a in ("rr", "nn")]
        out.append([s] + alts)
    return out


def generate(n_clusters, seed):
    """[(phone key, [conventional spelling, respelling, respelling])]."""
    rng = random.Random(seed)
    seen_keys, seen_words, clusters = set(), set(), []
    while len(clusters) < n_clusters:
        phones = syllable(rng) + syllable(rng)
        key = " ".join(p for p in phones if p)
        sl = slots(phones)
        options = [(i, alt) for i, opts in enumerate(sl) for alt in opts[1:]]
        if key in seen_keys or len(options) < 2:
            continue
        base = [opts[0] for opts in sl]
        # Two respellings, each changing one position.
        words = ["".join(base).capitalize()]
        for i, alt in rng.sample(options, 2):
            w = list(base)
            w[i] = alt
            words.append("".join(w).capitalize())
        if len(set(words)) < 3 or any(w in seen_words for w in words):
            continue
        seen_keys.add(key)
        seen_words.update(words)
        clusters.append((key, words))
    return clusters


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--clusters", type=int, default=200)
    ap.add_argument("--seed", type=int, default=20260101)
    ap.add_argument("--out", required=True)
    ap.add_argument("--conventional-out", help="also list each cluster's conventional spelling")
    args = ap.parse_args()

    clusters = generate(args.clusters, args.seed)
    lines = sorted(f"{w}\t{key}" for key, words in clusters for w in words)
    with open(args.out, "w") as f:
        f.write("\n".join(lines) + "\n")
    if args.conventional_out:
        with open(args.conventional_out, "w") as f:
            f.write("\n".join(sorted(words[0] for _, words in clusters)) + "\n")


if __name__ == "__main__":
    main()
