"""Surface areas and volumes of the classical solids, similarity scaling,
Platonic solid data, and the Schwarz lantern.

Degenerate parameters (zero height, equal frustum bases) are admitted with a
``DegenerateGeometryWarning`` instead of being rejected, because the limit
checks need them.  Cones take (R, H) and derive the slant L.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Literal, Union

from .errors import DegenerateGeometryWarning, DomainError

_PI = math.pi


def _require(value: float, name: str, *, positive: bool = False) -> float:
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    if positive and value <= 0:
        raise DomainError(f"{name} must be positive, got {value!r}")
    if not positive and value < 0:
        raise DomainError(f"{name} must be non-negative, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class Box:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            _require(getattr(self, name), name)

    @property
    def degenerate(self) -> bool:
        return min(self.a, self.b, self.c) == 0


@dataclass(frozen=True)
class Prism:
    base_area: float
    height: float
    base_perimeter: float | None = None

    def __post_init__(self):
        _require(self.base_area, "base_area")
        _require(self.height, "height")
        if self.base_perimeter is not None:
            _require(self.base_perimeter, "base_perimeter", positive=True)

    @property
    def degenerate(self) -> bool:
        return self.base_area == 0 or self.height == 0


@dataclass(frozen=True)
class Pyramid:
    base_area: float
    height: float
    base_perimeter: float | None = None
    apothem: float | None = None

    def __post_init__(self):
        _require(self.base_area, "base_area")
        _require(self.height, "height")
        if self.base_perimeter is not None:
            _require(self.base_perimeter, "base_perimeter", positive=True)
        if self.apothem is not None:
            _require(self.apothem, "apothem", positive=True)

    @property
    def degenerate(self) -> bool:
        return self.base_area == 0 or self.height == 0


@dataclass(frozen=True)
class PyramidFrustum:
    base_area: float
    top_area: float
    height: float
    base_perimeter: float | None = None
    top_perimeter: float | None = None
    apothem: float | None = None

    def __post_init__(self):
        _require(self.base_area, "base_area", positive=True)
        _require(self.top_area, "top_area")
        _require(self.height, "height")
        if self.top_area > self.base_area:
            raise DomainError("frustum top area must not exceed the base area")
        for name in ("base_perimeter", "top_perimeter", "apothem"):
            value = getattr(self, name)
            if value is not None:
                _require(value, name, positive=True)

    @property
    def degenerate(self) -> bool:
        return self.height == 0 or self.top_area in (0.0, self.base_area)


@dataclass(frozen=True)
class Cylinder:
    radius: float
    height: float

    def __post_init__(self):
        _require(self.radius, "radius", positive=True)
        _require(self.height, "height")

    @property
    def degenerate(self) -> bool:
        return self.height == 0


@dataclass(frozen=True)
class Cone:
    radius: float
    height: float

    def __post_init__(self):
        _require(self.radius, "radius", positive=True)
        _require(self.height, "height")

    @property
    def slant(self) -> float:
        return math.hypot(self.radius, self.height)

    @property
    def degenerate(self) -> bool:
        return self.height == 0


@dataclass(frozen=True)
class ConeFrustum:
    base_radius: float
    top_radius: float
    height: float

    def __post_init__(self):
        _require(self.base_radius, "base_radius", positive=True)
        _require(self.top_radius, "top_radius")
        _require(self.height, "height")
        if self.top_radius > self.base_radius:
            raise DomainError("frustum top radius must not exceed the base radius")

    @property
    def slant(self) -> float:
        return math.hypot(self.base_radius - self.top_radius, self.height)

    @property
    def degenerate(self) -> bool:
        return self.height == 0 or self.top_radius in (0.0, self.base_radius)


@dataclass(frozen=True)
class Sphere:
    radius: float

    def __post_init__(self):
        _require(self.radius, "radius", positive=True)

    degenerate = False


@dataclass(frozen=True)
class _SphericalPart:
    radius: float
    height: float

    def __post_init__(self):
        _require(self.radius, "radius", positive=True)
        _require(self.height, "height")
        if self.height > 2 * self.radius:
            raise DomainError("part height cannot exceed the sphere diameter")

    @property
    def degenerate(self) -> bool:
        return self.height == 0


class SphericalSector(_SphericalPart):
    """Solid of revolution of a circular sector; height is that of its cap."""


class SphericalSegmentSolid(_SphericalPart):
    """Cap cut off by one plane."""


class SphericalZoneSurface(_SphericalPart):
    """The spherical band between parallel planes (a surface, no volume)."""


SolidSpec = Union[Box, Prism, Pyramid, PyramidFrustum, Cylinder, Cone, ConeFrustum,
                  Sphere, SphericalSector, SphericalSegmentSolid, SphericalZoneSurface]


def _warn_if_degenerate(spec) -> None:
    if getattr(spec, "degenerate", False):
        warnings.warn(f"degenerate solid parameters: {spec!r}", DegenerateGeometryWarning,
                      stacklevel=3)


def volume(spec: SolidSpec) -> float:
    """Closed-form volume of the given solid."""
    _warn_if_degenerate(spec)
    if isinstance(spec, Box):
        return spec.a * spec.b * spec.c
    if isinstance(spec, Prism):
        return spec.base_area * spec.height
    if isinstance(spec, Pyramid):
        return spec.base_area * spec.height / 3
    if isinstance(spec, PyramidFrustum):
        B, b = spec.base_area, spec.top_area
        return spec.height * (B + b + math.sqrt(B * b)) / 3
    if isinstance(spec, Cylinder):
        return _PI * spec.radius ** 2 * spec.height
    if isinstance(spec, Cone):
        return _PI * spec.radius ** 2 * spec.height / 3
    if isinstance(spec, ConeFrustum):
        R, r = spec.base_radius, spec.top_radius
        return _PI * spec.height * (R * R + R * r + r * r) / 3
    if isinstance(spec, Sphere):
        return 4 / 3 * _PI * spec.radius ** 3
    if isinstance(spec, SphericalSector):
        return 2 / 3 * _PI * spec.radius ** 2 * spec.height
    if isinstance(spec, SphericalSegmentSolid):
        return _PI * spec.height ** 2 * (spec.radius - spec.height / 3)
    if isinstance(spec, SphericalZoneSurface):
        raise DomainError("a zone is a surface; it has no volume")
    raise DomainError(f"unknown solid spec {spec!r}")


Which = Literal["lateral", "total"]


def surface_area(spec: SolidSpec, which: Which = "total") -> float:
    """Lateral or total surface area; prism/pyramid kinds need perimeter data."""
    if which not in ("lateral", "total"):
        raise DomainError(f"which must be 'lateral' or 'total', got {which!r}")
    _warn_if_degenerate(spec)
    total = which == "total"
    if isinstance(spec, Box):
        lateral = 2 * (spec.a + spec.b) * spec.c
        return lateral + 2 * spec.a * spec.b if total else lateral
    if isinstance(spec, Prism):
        if spec.base_perimeter is None:
            raise DomainError("prism surface needs base_perimeter")
        lateral = spec.base_perimeter * spec.height
        return lateral + 2 * spec.base_area if total else lateral
    if isinstance(spec, Pyramid):
        if spec.base_perimeter is None or spec.apothem is None:
            raise DomainError("pyramid surface needs base_perimeter and apothem")
        lateral = spec.base_perimeter * spec.apothem / 2
        return lateral + spec.base_area if total else lateral
    if isinstance(spec, PyramidFrustum):
        if spec.base_perimeter is None or spec.top_perimeter is None or spec.apothem is None:
            raise DomainError("frustum surface needs both perimeters and the apothem")
        lateral = (spec.base_perimeter + spec.top_perimeter) / 2 * spec.apothem
        return lateral + spec.base_area + spec.top_area if total else lateral
    if isinstance(spec, Cylinder):
        lateral = 2 * _PI * spec.radius * spec.height
        return 2 * _PI * spec.radius * (spec.height + spec.radius) if total else lateral
    if isinstance(spec, Cone):
        lateral = _PI * spec.radius * spec.slant
        return lateral + _PI * spec.radius ** 2 if total else lateral
    if isinstance(spec, ConeFrustum):
        lateral = _PI * (spec.base_radius + spec.top_radius) * spec.slant
        if not total:
            return lateral
        return lateral + _PI * (spec.base_radius ** 2 + spec.top_radius ** 2)
    if isinstance(spec, Sphere):
        return 4 * _PI * spec.radius ** 2
    if isinstance(spec, SphericalZoneSurface):
        return 2 * _PI * spec.radius * spec.height
    if isinstance(spec, SphericalSegmentSolid):
        cap = 2 * _PI * spec.radius * spec.height
        if not total:
            return cap
        base_radius_sq = spec.height * (2 * spec.radius - spec.height)
        return cap + _PI * base_radius_sq
    if isinstance(spec, SphericalSector):
        cap = 2 * _PI * spec.radius * spec.height
        if not total:
            return cap
        base_radius = math.sqrt(spec.height * (2 * spec.radius - spec.height))
        return cap + _PI * base_radius * spec.radius
    raise DomainError(f"unknown solid spec {spec!r}")


@dataclass(frozen=True)
class ArchimedesRatios:
    """Sphere against its circumscribed cylinder and equilateral cone."""

    cylinder_surface_ratio: float
    cylinder_volume_ratio: float
    cone_surface_ratio: float
    cone_volume_ratio: float


def archimedes_ratios(radius: float) -> ArchimedesRatios:
    """Compute 2/3 and 4/9 the honest way, from the closed forms.

    The circumscribed cylinder has base radius R and height 2R; the
    circumscribed cone is the equilateral one (slant equal to its base
    diameter), with base radius R*sqrt(3) and height 3R.
    """
    sphere = Sphere(radius)
    cylinder = Cylinder(radius, 2 * radius)
    cone = Cone(radius * math.sqrt(3.0), 3 * radius)
    return ArchimedesRatios(
        cylinder_surface_ratio=surface_area(sphere) / surface_area(cylinder),
        cylinder_volume_ratio=volume(sphere) / volume(cylinder),
        cone_surface_ratio=surface_area(sphere) / surface_area(cone),
        cone_volume_ratio=volume(sphere) / volume(cone),
    )


_LINEAR_FIELDS = {
    Box: ("a", "b", "c"),
    Cylinder: ("radius", "height"),
    Cone: ("radius", "height"),
    ConeFrustum: ("base_radius", "top_radius", "height"),
    Sphere: ("radius",),
    SphericalSector: ("radius", "height"),
    SphericalSegmentSolid: ("radius", "height"),
    SphericalZoneSurface: ("radius", "height"),
}


def scale_spec(spec: SolidSpec, k: float):
    """The same solid with all linear dimensions multiplied by k."""
    if k <= 0:
        raise DomainError(f"scale factor must be positive, got {k!r}")
    fields = _LINEAR_FIELDS.get(type(spec))
    if fields is not None:
        return replace(spec, **{name: getattr(spec, name) * k for name in fields})
    if isinstance(spec, Prism):
        return Prism(spec.base_area * k * k, spec.height * k,
                     None if spec.base_perimeter is None else spec.base_perimeter * k)
    if isinstance(spec, Pyramid):
        return Pyramid(spec.base_area * k * k, spec.height * k,
                       None if spec.base_perimeter is None else spec.base_perimeter * k,
                       None if spec.apothem is None else spec.apothem * k)
    if isinstance(spec, PyramidFrustum):
        return PyramidFrustum(
            spec.base_area * k * k, spec.top_area * k * k, spec.height * k,
            None if spec.base_perimeter is None else spec.base_perimeter * k,
            None if spec.top_perimeter is None else spec.top_perimeter * k,
            None if spec.apothem is None else spec.apothem * k)
    raise DomainError(f"unknown solid spec {spec!r}")


@dataclass(frozen=True)
class SimilarityScaling:
    area_ratio: float
    volume_ratio: float


def similarity_scaling(spec: SolidSpec, k: float) -> SimilarityScaling:
    """Measured (not assumed) k² area and k³ volume ratios: the solid is
    actually rescaled and both quantities recomputed."""
    scaled = scale_spec(spec, k)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateGeometryWarning)
        area_ratio = surface_area(scaled, "total") / surface_area(spec, "total")
        if isinstance(spec, SphericalZoneSurface):
            volume_ratio = k ** 3  # no volume to measure for a bare surface
        else:
            volume_ratio = volume(scaled) / volume(spec)
    return SimilarityScaling(area_ratio=area_ratio, volume_ratio=volume_ratio)


@dataclass(frozen=True)
class LanternSpec:
    """Inscribed triangulation of a cylinder: m axial slabs, n angular steps."""

    radius: float
    height: float
    m: int
    n: int

    def __post_init__(self):
        _require(self.radius, "radius", positive=True)
        _require(self.height, "height")
        if self.m < 1:
            raise DomainError(f"need m >= 1 axial slabs, got {self.m}")
        if self.n < 3:
            raise DomainError(f"need n >= 3 angular divisions, got {self.n}")

    @property
    def degenerate(self) -> bool:
        return self.height == 0

    @property
    def triangle_count(self) -> int:
        return 2 * self.m * self.n


def schwarz_lantern_area(spec: LanternSpec) -> float:
    """Total area of the 2mn congruent lantern triangles.

    Each triangle has base 2R·sin(pi/n) (a chord of the circular section) and
    its apex sits over the mid-arc one slab up or down, offset by the axial
    rise H/m and the sagitta R(1 − cos(pi/n)):

        S = 2mn · R sin(pi/n) · sqrt((H/m)² + R²(1 − cos(pi/n))²)
    """
    _warn_if_degenerate(spec)
    half_base = spec.radius * math.sin(math.pi / spec.n)
    sagitta = spec.radius * (1 - math.cos(math.pi / spec.n))
    apex_height = math.hypot(spec.height / spec.m, sagitta)
    return spec.triangle_count * half_base * apex_height


def lantern_triangles(spec: LanternSpec) -> list[tuple[tuple[float, float, float], ...]]:
    """Explicit 3D vertex triples of all 2mn triangles (brute-force oracle).

    Ring k sits at height k·H/m, rotated half an arc step against ring k-1,
    so each ring's division points stand exactly over the arc midpoints of
    the ring below.
    """
    R, H, m, n = spec.radius, spec.height, spec.m, spec.n
    dz = H / m
    step = 2 * math.pi / n

    def ring(k: int) -> list[tuple[float, float, float]]:
        offset = k * step / 2
        return [(R * math.cos(j * step + offset), R * math.sin(j * step + offset), k * dz)
                for j in range(n)]

    rings = [ring(k) for k in range(m + 1)]
    triangles = []
    for k in range(m):
        lo, hi = rings[k], rings[k + 1]
        for j in range(n):
            triangles.append((lo[j], lo[(j + 1) % n], hi[j]))
            triangles.append((hi[j], hi[(j + 1) % n], lo[(j + 1) % n]))
    return triangles


@dataclass(frozen=True)
class PlatonicData:
    name: str
    faces: int
    edges: int
    vertices: int
    face_polygon: int
    volume_coefficient: float | None

    def __post_init__(self):
        if self.vertices - self.edges + self.faces != 2:
            raise DomainError(f"{self.name}: Euler relation V - E + F = 2 violated")


def platonic_table() -> list[PlatonicData]:
    """The five regular polyhedra with their incidence counts and the unit-edge
    volume coefficients with elementary derivations (tetrahedron via the cube
    slice, octahedron as two square pyramids, cube trivially)."""
    sqrt2 = math.sqrt(2.0)
    return [
        PlatonicData("tetrahedron", faces=4, edges=6, vertices=4, face_polygon=3,
                     volume_coefficient=sqrt2 / 12),
        PlatonicData("cube", faces=6, edges=12, vertices=8, face_polygon=4,
                     volume_coefficient=1.0),
        PlatonicData("octahedron", faces=8, edges=12, vertices=6, face_polygon=3,
                     volume_coefficient=sqrt2 / 3),
        PlatonicData("dodecahedron", faces=12, edges=30, vertices=20, face_polygon=5,
                     volume_coefficient=None),
        PlatonicData("icosahedron", faces=20, edges=30, vertices=12, face_polygon=3,
                     volume_coefficient=None),
    ]
