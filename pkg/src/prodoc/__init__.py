"""prodoc: extracts structured comments from Prolog source trees and
publishes them as browsable, searchable HTML."""

__version__ = "0.1.0"
