"""Generators, enumeration, formats and the crosscheck harness."""

from .crosscheck import SUITES, CrosscheckReport, check_graphs, crosscheck
from .enumeration import canonical_form, enumerate_connected, is_isomorphic
from .formats import ParseError, parse, read_graphs, serialize
from .generators import GeneratorSpec, SplitMix64, generate
