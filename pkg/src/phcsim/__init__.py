"""Simulation and queueing analysis of small primary-care facilities.

The package has three layers: a generic discrete-event kernel
(``phcsim.kernel``), a clinic model built on it (``phcsim.model``), and an
analytical queueing toolkit (``phcsim.analytics``) whose approximations the
simulator is used to check. ``phcsim.harness`` adds scenario running,
sweeps, exports and the command line interface.
"""

__version__ = "0.1.0"
