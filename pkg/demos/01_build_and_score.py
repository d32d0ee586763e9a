"""Build a probability graph by hand and look at its entropies.

A relation extractor never says "teacher of", full stop.  It scores
every label it knows for every entity pair, and the shape of that score
vector is information in itself: a peaked distribution means the
extractor is sure, a flat one means guesswork.  This script builds a
three-edge graph and prints what the entropy column sees.
"""

import kgsqueeze as kq

TEXT = "Marie Curie discovered polonium and radium in Paris."

entities = [
    kq.Entity("curie", "Marie Curie", 0),
    kq.Entity("polonium", "polonium", 3),
    kq.Entity("radium", "radium", 5),
    kq.Entity("paris", "Paris", 7),
]

# each candidate carries confidences over the whole relation set;
# missing labels are implicit zeros
relations = ("discovered", "born in", "worked in")
candidates = [
    ("curie", "polonium", {"discovered": 0.98, "worked in": 0.02}),
    ("curie", "radium", {"discovered": 0.90, "born in": 0.04, "worked in": 0.06}),
    ("curie", "paris", {"discovered": 0.20, "born in": 0.30, "worked in": 0.50}),
]

graph = kq.build_graph(TEXT, relations, entities, candidates)

print(f"text: {graph.text}")
print(f"relation set: {', '.join(graph.relation_set)}")
print()
print(f"{'quadruple':<42} {'top relation':<12} {'top p':>6} {'entropy':>8}")
for q in graph.quadruples:
    pair = f"({graph.entity(q.head).surface}, {graph.entity(q.tail).surface})"
    print(f"{pair:<42} {q.top_relation:<12} {q.top_probability:>6.2f} {q.entropy:>8.4f}")

print()
print("The Curie-Paris edge is nearly uniform: high entropy, vague")
print("semantics.  Compression should keep it last, and does.")
