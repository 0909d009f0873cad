"""Domain packages for qhom: algebra, chains, homology, homotopy and runs."""
