# Forest Hilbert package: Hilbert functions of t-labeled forest algebras and Tutte polynomials
