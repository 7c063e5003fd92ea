"""powertrees: exact spanning-tree counts for power graphs of finite groups
and clique-replaced graphs, with cross-validated closed forms."""

__version__ = "0.1.0"
