"""Find the central concept of a graph and measure distances from it.

Texts revolve around something.  The entity filling the most quadruple
endpoint slots is taken as that center, and every other entity gets a
relational distance: the minimum number of edges to reach it, direction
ignored.  The city fixture makes the idea concrete.
"""

from pathlib import Path

import kgsqueeze as kq

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

graph = kq.parse_graph_document((FIXTURES / "hangzhou.json").read_bytes())
centre = kq.select_initial_node(graph)
table = kq.all_distances(graph, centre)

print(f"text: {graph.text}")
print()
print(f"central concept: {graph.entity(centre).surface!r}")
print(f"(it fills {graph.occurrence_counts()[centre]} of "
      f"{2 * len(graph.quadruples)} endpoint slots)")
print()
print(f"{'entity':<24} {'distance':>8}")
for entity in graph.entities:
    d = table.distance[entity.id]
    shown = "unreachable" if not table.is_reachable(entity.id) else d
    print(f"{entity.surface:<24} {shown:>8}")

print()
print("West Lake touches the center directly (distance 1); the birth")
print("date 1890.3.7 is three hops out, through Chu Kochen.  A depth")
print("limit D keeps selected quadruples within that radius.")
