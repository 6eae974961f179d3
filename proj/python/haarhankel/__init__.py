"""Hankel transforms of order 0 and 1 through Haar wavelet series."""

from ._core import (
    CapacityError,
    InputError,
    IntegrationError,
    TransformOrder,
    WaveletCoefficients,
    atom_transform_detail,
    atom_transform_scaling,
    bessel_j0,
    bessel_j1,
    decompose,
    direct_hankel,
    gaussian_coefficients,
    gaussian_exact_transform,
    j0_primitive,
    reconstruct,
    struve_d,
    struve_h0,
    struve_h1,
    transform,
    transform_grid,
)

__all__ = [
    "CapacityError",
    "InputError",
    "IntegrationError",
    "TransformOrder",
    "WaveletCoefficients",
    "atom_transform_detail",
    "atom_transform_scaling",
    "bessel_j0",
    "bessel_j1",
    "decompose",
    "direct_hankel",
    "gaussian_coefficients",
    "gaussian_exact_transform",
    "j0_primitive",
    "reconstruct",
    "struve_d",
    "struve_h0",
    "struve_h1",
    "transform",
    "transform_grid",
]
