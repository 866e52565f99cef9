"""Degree-1 invariants and quadratic relations of Lusztig algebras."""

from .algebra import (
    QuadraticIdeal,
    invariant_degree1,
    relation_count_oracle,
    relations_degree2,
    reynolds_project,
)
from .groups import GroupModel, builtin_reps, group_closure

__all__ = [
    "GroupModel",
    "QuadraticIdeal",
    "builtin_reps",
    "group_closure",
    "invariant_degree1",
    "relation_count_oracle",
    "relations_degree2",
    "reynolds_project",
]
