"""Regenerate data/mini_corpus.jsonl, the deterministic synthetic corpus used
by the evaluation tests and demos.

Each document mixes sentences about a main topic with off-topic filler; the
reference summary is three on-topic sentences placed away from the lead so
Lead3 is not trivially perfect.
"""

import json
import random
from pathlib import Path

TOPICS = {
    "orbit": ["satellite", "orbit", "telescope", "launch", "rocket", "station",
              "astronaut", "module", "signal", "antenna"],
    "kitchen": ["broth", "onion", "skillet", "simmer", "butter", "garlic",
                "flour", "oven", "dough", "season"],
    "market": ["bond", "yield", "index", "trader", "equity", "dividend",
               "hedge", "margin", "broker", "ledger"],
    "trail": ["ridge", "summit", "glacier", "valley", "compass", "traverse",
              "basecamp", "scramble", "switchback", "cairn"],
}

FILLER = ["meanwhile", "report", "weather", "city", "tuesday", "official",
          "meeting", "street", "coffee", "window", "afternoon", "neighbor"]

TEMPLATES = [
    "The {0} reached the {1} before the {2} was ready.",
    "Every {0} near the {1} depended on a single {2}.",
    "A {0} and a {1} shared the same {2} for years.",
    "Nobody expected the {0} to survive the {1} without its {2}.",
    "Engineers checked the {0} while the {1} passed the {2}.",
    "The old {0} kept its {1} close to the {2}.",
]


def make_sentence(rng, words):
    picks = rng.sample(words, 3)
    return rng.choice(TEMPLATES).format(*picks)


def make_document(rng, doc_id, topic_words):
    n_sentences = rng.randint(8, 12)
    core_positions = sorted(rng.sample(range(1, n_sentences), 3))
    sentences = []
    for i in range(n_sentences):
        if i in core_positions:
            sentences.append(make_sentence(rng, topic_words))
        else:
            # filler with a sprinkle of topic vocabulary to create weak edges
            pool = FILLER + topic_words[:3]
            sentences.append(make_sentence(rng, pool))
    reference = " ".join(sentences[i] for i in core_positions)
    return {"id": doc_id, "sentences": sentences, "summary": reference,
            "lang": "latin"}


def main():
    rng = random.Random(20240817)
    out = Path(__file__).resolve().parents[1] / "data" / "mini_corpus.jsonl"
    out.parent.mkdir(exist_ok=True)
    topics = sorted(TOPICS)
    with out.open("w", encoding="utf-8") as fh:
        for i in range(24):
            topic = topics[i % len(topics)]
            doc = make_document(rng, f"mini-{i:03d}", TOPICS[topic])
            fh.write(json.dumps(doc) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
