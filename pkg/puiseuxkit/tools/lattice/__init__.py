# Integer lattice and finite abelian group package
