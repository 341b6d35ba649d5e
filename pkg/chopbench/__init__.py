# chopbench: Model checking workbench for PDL over language classes and FLC.
#
# Author: The chopbench developers
# Last Change: October 16, 2026

"""
The top level :mod:`chopbench` module contains only a version number.

.. data:: __version__

   The version number of the `chopbench` package (a string).
"""

# Semi-standard module versioning.
__version__ = '1.0'
