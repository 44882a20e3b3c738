"""Decision procedures and certificates for hopfian and co-hopfian semigroups."""

__version__ = "0.1.0"
