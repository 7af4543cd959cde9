"""Multimode circuit-QED toolkit.

Submodules
----------
geometry   : waveguide cutoff budgets and rectangular/tapered cavity spectra
resonator  : complex S21/S11 resonator models and least-squares fitting
bcs        : Mattis-Bardeen conductivity and temperature-sweep fitting
bbq        : black-box quantization of a transmon coupled to many modes
drive      : closed-form drive algebra (sidebands, blockade, dephasing limits)
dynamics   : Lindblad time-domain simulation of the cavity-control protocols
units      : SI-suffixed quantity parsing and formatting

All public interfaces use ordinary frequency (Hz) for frequencies and rates
unless a docstring says otherwise; angular-frequency factors are handled
internally.
"""

__version__ = "0.1.0"

from . import bbq, bcs, drive, dynamics, geometry, resonator, units  # noqa: F401
