"""Turn a transmission budget into a quadruple quota.

A channel with bandwidth B, transmit power P, gain g and noise power N
carries at most T * B * log2(1 + P*g/N) bits in T seconds.  Dividing by
the wire cost of one quadruple and flooring gives the quota H; zero is
a legal answer when the link cannot carry even one.
"""

import kgsqueeze as kq

GRAPH_SIZE = 10
BITS_PER_QUADRUPLE = 400

print(f"graph of {GRAPH_SIZE} quadruples, "
      f"{BITS_PER_QUADRUPLE} bits each on the wire\n")
print(f"{'power (W)':>9} {'capacity (bits)':>16} {'H':>3} {'K':>6}")
for power in (0.0, 0.5, 1.0, 3.0, 15.0, 1000.0):
    budget = kq.ChannelBudget(
        time=1.0,
        bandwidth=1000.0,
        power=power,
        channel_gain=1.0,
        noise_power=1.0,
        bits_per_quadruple=BITS_PER_QUADRUPLE,
    )
    h = kq.budget_to_quota(budget, GRAPH_SIZE)
    note = "  (nothing transmittable)" if h == 0 else ""
    print(f"{power:>9.1f} {budget.capacity_bits():>16.1f} {h:>3} "
          f"{h / GRAPH_SIZE:>6.2f}{note}")

print()
print("3 W is the textbook point: 2000 bits of capacity carries exactly")
print("5 quadruples.  15 W carries the whole graph, and past that the")
print("quota clamps; more power cannot keep more than exists.")
