"""Services for computations on knot complexes."""
