"""symring: exact-arithmetic graded rings around symmetric products of the
plane, with brute-force verification of their structural isomorphisms.

Subpackages by topic: partitions (index combinatorics), exact (rational
polynomials and degreewise linear algebra), classalg (symmetric group class
sums and the cup product), macmahon (two-alphabet monomial symmetric
functions), fixedring (the torus-fixed quotient and its independent
oracle), duality (the main correspondence), spaltenstein (slice ideals),
hypertoric (Gale duality and Stanley-Reisner quotients), cli (drivers).
"""

__version__ = "0.1.0"
