"""Exact computational Lie theory for quantum minimal surface algebras.

Modules
-------
cartan     generalized Cartan matrices, catalog, colorings
rootsys    root systems, membership, root strings
chevalley  finite-type Chevalley algebras over Q / Q(i)
loopalg    loop realisation of affine algebras and its involutions
berman     Berman generators, relations and the Delta operator
spinrep    spin-1/2 matrices from Pauli strings
freelie    Lyndon bases, truncated QMSA quotients
qmsa       morphism verification and surjectivity certificates
"""

__version__ = "0.1.0"
