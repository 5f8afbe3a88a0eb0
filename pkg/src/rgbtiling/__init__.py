"""RGB edge-tilings, canal lines and Kempe-chain machinery on planar triangulations."""

__version__ = "0.1.0"
