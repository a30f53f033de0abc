"""Decision procedures for finite topological spaces and binary relations."""

from .relation import OrderPropertyVector, Relation, order_properties
from .topology import FiniteSpace, new_space, topologies
from .toporel import TopoPropertyReport, topo_report

__all__ = [
    "FiniteSpace", "new_space", "topologies",
    "Relation", "OrderPropertyVector", "order_properties",
    "TopoPropertyReport", "topo_report",
]
