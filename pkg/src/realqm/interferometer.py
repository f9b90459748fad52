"""Two-port interferometer elements in the complex and real pictures at once.

A balanced interferometer (splitter, mirror pair, splitter) composes to
minus the identity when the splitter is normalized, and to minus twice the
identity for the bare plus-minus-one matrix some optics texts print.  Both
facts survive the passage to real block form entry for entry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .realmap import realify_op, realify_state

_SQRT1_2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class OpticalElement:
    label: str
    complex_form: np.ndarray
    real_form: np.ndarray


def _element(label: str, m) -> OpticalElement:
    m = np.asarray(m, dtype=complex)
    return OpticalElement(label, m, realify_op(m))


def beamsplitter() -> OpticalElement:
    """Balanced splitter (1/sqrt2) [[1, i], [i, 1]]; applying it twice gives the mirror."""
    return _element("beamsplitter", _SQRT1_2 * np.array([[1.0, 1.0j], [1.0j, 1.0]]))


def mirror() -> OpticalElement:
    """Mirror pair [[0, i], [i, 0]]: swaps the arms with a quarter-turn phase."""
    return _element("mirror", np.array([[0.0, 1.0j], [1.0j, 0.0]]))


def phase_shifter(phi: float) -> OpticalElement:
    """diag(1, exp(i phi)): a phase plate in the second arm."""
    return _element("phase_shifter", np.diag([1.0, np.exp(1.0j * phi)]))


def mach_zehnder(representation: str = "complex", normalized: bool = True) -> np.ndarray:
    """Composite splitter-mirror-splitter matrix.

    Normalized optics give exactly minus the identity; the bare integer
    variant scales the splitters by sqrt(2) each, hence minus twice the
    identity.
    """
    bs = beamsplitter()
    mi = mirror()
    if representation == "complex":
        prod = bs.complex_form @ mi.complex_form @ bs.complex_form
    elif representation == "real":
        prod = bs.real_form @ mi.real_form @ bs.real_form
    else:
        raise ValueError(f"unknown representation {representation!r}")
    return prod if normalized else 2.0 * prod


def mach_zehnder_with_phase(phi: float, representation: str = "real") -> tuple[float, float]:
    """Output-port probabilities with a phase plate between mirror and final splitter.

    Input enters the first port.  Closed form: (cos(phi/2)^2, sin(phi/2)^2).
    """
    bs = beamsplitter()
    mi = mirror()
    ps = phase_shifter(phi)
    if representation == "complex":
        out = bs.complex_form @ ps.complex_form @ mi.complex_form @ bs.complex_form @ np.array([1.0, 0.0], dtype=complex)
        p = np.abs(out) ** 2
    elif representation == "real":
        r0 = realify_state([1.0, 0.0])
        out = bs.real_form @ ps.real_form @ mi.real_form @ bs.real_form @ r0
        p = out[0::2] ** 2 + out[1::2] ** 2
    else:
        raise ValueError(f"unknown representation {representation!r}")
    return float(p[0]), float(p[1])


def composite_report() -> dict[str, float]:
    """Residuals of the closed-form composite identities, for reports and tests."""
    eye2 = np.eye(2)
    eye4 = np.eye(4)
    bs = beamsplitter()
    mi = mirror()
    return {
        "normalized_complex_vs_minus_identity": float(
            np.linalg.norm(mach_zehnder("complex") + eye2)
        ),
        "normalized_real_vs_minus_identity": float(
            np.linalg.norm(mach_zehnder("real") + eye4)
        ),
        "unnormalized_complex_vs_minus_two_identity": float(
            np.linalg.norm(mach_zehnder("complex", normalized=False) + 2.0 * eye2)
        ),
        "unnormalized_real_vs_minus_two_identity": float(
            np.linalg.norm(mach_zehnder("real", normalized=False) + 2.0 * eye4)
        ),
        "beamsplitter_squared_vs_mirror_complex": float(
            np.linalg.norm(bs.complex_form @ bs.complex_form - mi.complex_form)
        ),
        "beamsplitter_squared_vs_mirror_real": float(
            np.linalg.norm(bs.real_form @ bs.real_form - mi.real_form)
        ),
    }
