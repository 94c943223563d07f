# -*- coding: utf-8 -*-
"""
SMRTools subpackage providing the shipped phantoms.

.. currentmodule:: smrtools.phantom.models

The following classes and functions are provided

.. autosummary::
   MonomialX2YZ3
   UnitBall
   phantom_from_config
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import numpy as np

from smrtools.grid.axis import Point3
from smrtools.phantom.base import Phantom
from smrtools.tools.errors import DomainError, ValidationError

__all__ = ["MonomialX2YZ3", "UnitBall", "PHANTOMS", "phantom_from_config"]


class MonomialX2YZ3(Phantom):
    r"""The smooth monomial phantom.

    Given by:

    .. math::
       f(x, y, z) = \begin{cases}
       x^2 y z^3 & z \geq 0 \\
       0 & z < 0
       \end{cases}

    Its spherical mean over spheres centered on the detector plane is

    .. math::
       Mf(x, y, u) = \frac{1}{8} x^2 y u^3 + \frac{1}{48} y u^5

    Notes
    -----
    The support is unbounded, so :any:`support_bound` is infinite.
    """

    name = "monomial"

    def evaluate(self, x, y, z):
        """Vectorized evaluation of the phantom."""
        x, y, z = (np.asarray(v, dtype=np.double) for v in (x, y, z))
        return np.where(z >= 0.0, x ** 2 * y * z ** 3, 0.0)

    def _mean(self, cx, cy, u):
        return cx ** 2 * cy * u ** 3 / 8.0 + cy * u ** 5 / 48.0


class UnitBall(Phantom):
    r"""Indicator of a ball above the detector plane.

    Given by:

    .. math::
       f(P) = \begin{cases}
       v & |P - C| \leq R \\
       0 & \text{else}
       \end{cases}

    The spherical mean is the cap fraction of the sphere inside the ball:

    .. math::
       Mf(x, y, u) = v \left(\frac{1}{2}
       - \frac{d^2 + u^2 - R^2}{4 u d}\right)
       \quad\text{for}\quad d - R \leq u \leq d + R

    and 0 else, with the distance :math:`d` of :math:`(x, y, 0)` to
    :math:`C`.

    Parameters
    ----------
    center : :any:`Point3` or :class:`tuple`, optional
        Center of the ball. Default: ``(0, 0, 2)``
    radius : :class:`float`, optional
        Radius of the ball. ``center.z - radius`` needs to be > 0.
        Default: ``1``
    value : :class:`float`, optional
        Amplitude inside the ball. Default: ``1``
    """

    name = "ball"
    indicator = True

    def __init__(self, center=(0.0, 0.0, 2.0), radius=1.0, value=1.0):
        super(UnitBall, self).__init__()
        self._center = Point3(*center)
        self._radius = float(radius)
        self._value = float(value)
        if not self._radius > 0.0:
            raise DomainError(
                "smrtools.UnitBall: radius needs to be > 0, got "
                + str(self._radius)
            )
        if not self._center.z - self._radius > 0.0:
            raise DomainError(
                "smrtools.UnitBall: the ball needs to lie in {z > 0}, "
                "got center.z - radius = "
                + str(self._center.z - self._radius)
            )
        if not np.isfinite(self._value):
            raise DomainError("smrtools.UnitBall: value needs to be finite")

    @property
    def center(self):
        """:any:`Point3`: Center of the ball."""
        return self._center

    @property
    def radius(self):
        """:class:`float`: Radius of the ball."""
        return self._radius

    @property
    def value(self):
        """:class:`float`: Amplitude inside the ball."""
        return self._value

    def evaluate(self, x, y, z):
        """Vectorized evaluation of the phantom."""
        x, y, z = (np.asarray(v, dtype=np.double) for v in (x, y, z))
        cx, cy, cz = self._center
        dist2 = (x - cx) ** 2 + (y - cy) ** 2 + (z - cz) ** 2
        return np.where(dist2 <= self._radius ** 2, self._value, 0.0)

    def center_distance(self, cx, cy):
        """Distance of the sphere center ``(cx, cy, 0)`` to the ball center."""
        return np.sqrt(
            (cx - self._center.x) ** 2
            + (cy - self._center.y) ** 2
            + self._center.z ** 2
        )

    def _mean(self, cx, cy, u):
        rad = self._radius
        dist = self.center_distance(cx, cy)
        inside = (u >= dist - rad) & (u <= dist + rad)
        # dist > rad, so every radius meeting the ball is bounded away from 0
        u_in = np.where(inside, u, dist)
        frac = 0.5 - (dist ** 2 + u_in ** 2 - rad ** 2) / (4.0 * u_in * dist)
        # rounding at the tangent radii must not leave [0, 1]
        return np.where(inside, self._value * np.clip(frac, 0.0, 1.0), 0.0)

    @property
    def support_bound(self):
        """:class:`float`: ``|center| + radius``."""
        return float(np.linalg.norm(self._center) + self._radius)

    def intersects(self, cx, cy, u):
        """Whether the sphere ``S((cx, cy, 0), u)`` meets the ball."""
        if not u > 0.0:
            return False
        dist = float(self.center_distance(cx, cy))
        return bool(abs(dist - u) <= self._radius)

    def __repr__(self):
        """Return String representation."""
        return "UnitBall(center=({0}, {1}, {2}), radius={3}, value={4})".format(
            self._center.x,
            self._center.y,
            self._center.z,
            self._radius,
            self._value,
        )


#: phantoms selectable by name
PHANTOMS = {cls.name: cls for cls in (MonomialX2YZ3, UnitBall)}


def _floats(text, count, key):
    if isinstance(text, str):
        parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    else:
        parts = list(text)
    try:
        vals = [float(p) for p in parts]
    except (TypeError, ValueError):
        raise ValidationError(
            "{0}: expected {1} numbers, got {2!r}".format(key, count, text),
            prefix="smrtools.phantom_from_config",
        )
    if len(vals) != count:
        raise ValidationError(
            "{0}: expected {1} numbers, got {2!r}".format(key, count, text),
            prefix="smrtools.phantom_from_config",
        )
    return vals


def phantom_from_config(mapping):
    """Create a phantom from a ``key = value`` mapping.

    Recognized keys are ``phantom`` (``monomial`` or ``ball``) and for the
    ball ``center`` (``"x,y,z"``), ``radius`` and ``value``.

    Parameters
    ----------
    mapping : :class:`dict`
        The configuration.

    Returns
    -------
    :any:`Phantom`

    Examples
    --------
    >>> phantom_from_config({"phantom": "ball", "center": "0,0,2", "radius": 1})
    UnitBall(center=(0.0, 0.0, 2.0), radius=1.0, value=1.0)
    """
    name = str(mapping.get("phantom", "")).strip().lower()
    if name not in PHANTOMS:
        raise ValidationError(
            "phantom: unknown phantom {0!r}, use one of {1}".format(
                name, sorted(PHANTOMS)
            ),
            prefix="smrtools.phantom_from_config",
        )
    if name == MonomialX2YZ3.name:
        return MonomialX2YZ3()
    kwargs = {}
    if mapping.get("center") is not None:
        kwargs["center"] = _floats(mapping["center"], 3, "center")
    for key in ("radius", "value"):
        if mapping.get(key) is not None:
            kwargs[key] = _floats([mapping[key]], 1, key)[0]
    return UnitBall(**kwargs)
