"""Finite-scale engine for tight/loose enriched category theory.

The package is organized bottom-up:

- cat_core: finite categories, functors, presentations, rewriting.
- two_cat: finite 2-categories, weak transformations, weighted limits.
- f_core: categories with a marked class of tight morphisms.
- weights: weights for tight/loose limits and the example zoo.
- kan_classifiers: classifiers for weak transformations, coalgebras.
- riggedness: weight classification (PIE, rigged, tightly rigged).
- monad_alg: finite 2-monads, weak morphisms, limit lifting.
- cli_io: JSON serialization and the command line interface.
"""

__version__ = "0.1.0"
