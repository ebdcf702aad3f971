"""Cone geometry of deformation spaces.

Ray enumeration for the pointed cone (linear span intersect nonnegative
orthant), autonomous edge sets, characteristic-vector rays, simpliciality
by dependency blocks, and the product law for deformation cones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .ddcore import dd_rays
from .errors import InputError, ResourceLimitError
from .exact import Vec, nullspace
from .framework import (
    DeformationSpace,
    Edge,
    Framework,
    cycle_basis,
    cycle_equation_rows,
    dc_dimension,
    deformation_space,
    dependency_partition,
    edge_key,
)

MAX_EDGES = 60
MAX_SPAN_DIM = 12


@dataclass(frozen=True)
class Cone:
    """Rays of span(basis) intersected with the nonnegative orthant.

    Rays are indexed like the framework's edge tuple and scaled so the
    first nonzero coordinate is 1.
    """

    ambient_edges: tuple[Edge, ...]
    span_dim: int
    rays: tuple[Vec, ...]


def enumerate_rays(
    ds: DeformationSpace,
    max_edges: int = MAX_EDGES,
    max_span_dim: int = MAX_SPAN_DIM,
) -> Cone:
    fw = ds.framework
    ne = len(fw.edges)
    if ne > max_edges:
        raise ResourceLimitError(
            f"ray enumeration guard: {ne} edges exceeds limit {max_edges}"
        )
    if ds.dim > max_span_dim:
        raise ResourceLimitError(
            f"ray enumeration guard: span dimension {ds.dim} exceeds limit {max_span_dim}"
        )
    if ds.dim == 0:
        return Cone(fw.edges, 0, ())
    rows = [tuple(b[i] for b in ds.basis) for i in range(ne)]
    rays_t = dd_rays(rows, ds.dim)
    rays = []
    for t in rays_t:
        lam = tuple(
            sum((t[i] * b[j] for i, b in enumerate(ds.basis)), Fraction(0))
            for j in range(ne)
        )
        assert all(x >= 0 for x in lam)
        j = next(i for i, x in enumerate(lam) if x != 0)
        lam = tuple(x / lam[j] for x in lam)
        rays.append(lam)
    return Cone(fw.edges, ds.dim, tuple(sorted(rays)))


def ray_adjacency(ds: DeformationSpace, cone: Cone) -> set[tuple[int, int]]:
    """Pairs of ray indices spanning a two-dimensional face.

    A face of the cone is cut out by forcing a set of coordinates to zero
    inside the linear span; two rays are adjacent exactly when zeroing
    everything outside their joint support leaves a plane.
    """
    fw = ds.framework
    ne = len(fw.edges)
    out = set()
    for i, j in itertools.combinations(range(len(cone.rays)), 2):
        support = {
            k for k in range(ne) if cone.rays[i][k] != 0 or cone.rays[j][k] != 0
        }
        rows = [[b[k] for b in ds.basis] for k in range(ne) if k not in support]
        face_dim = len(nullspace(rows, ds.dim)) if rows else ds.dim
        if face_dim == 2:
            out.add((i, j))
    return out


def characteristic_vector(fw: Framework, edge_set) -> Vec:
    chosen = {edge_key(u, v) for u, v in edge_set}
    unknown = chosen - set(fw.edges)
    if unknown:
        raise InputError(f"not edges of the framework: {sorted(unknown)}")
    return tuple(Fraction(1 if e in chosen else 0) for e in fw.edges)


def is_autonomous(fw: Framework, edge_set) -> bool:
    """Is the 0/1 vector of the set a valid deformation (collapsing the
    complement keeps every cycle closed)?"""
    ell = characteristic_vector(fw, edge_set)
    rows = cycle_equation_rows(fw, cycle_basis(fw))
    return all(sum(a * x for a, x in zip(row, ell)) == 0 for row in rows)


def characteristic_ray(fw: Framework, edge_set):
    """(ray, reason) with ray None on refusal.

    The characteristic vector is a certified ray exactly when the set is
    autonomous and is a full dependency block.
    """
    chosen = frozenset(edge_key(u, v) for u, v in edge_set)
    if not chosen:
        raise InputError("empty edge set")
    if not is_autonomous(fw, chosen):
        return None, "set is not autonomous (a cycle equation fails)"
    blocks = dependency_partition(fw)
    block = next((b for b in blocks if b & chosen), None)
    if block is None or block != chosen:
        return None, "set is not a single full dependency block"
    return characteristic_vector(fw, chosen), "certified ray"


def is_simplicial_by_partition(fw: Framework):
    """(flag, rays): simplicial with one ray per block when every
    dependency block is autonomous."""
    blocks = dependency_partition(fw)
    if not blocks:
        return False, []
    rays = []
    for b in blocks:
        if not is_autonomous(fw, b):
            return False, []
        rays.append(characteristic_vector(fw, b))
    return True, sorted(rays)


def embed_product_ray(product: Framework, factor: Framework, ray: Vec, side: str) -> Vec:
    """Lift a factor ray to the product framework's edge coordinates.

    Product vertices are labeled "uL|uR"; an edge of the left factor shows
    up once per right vertex, and symmetrically.
    """
    eidx = {e: i for i, e in enumerate(factor.edges)}
    out = []
    for u, v in product.edges:
        ul, ur = u.split("|", 1)
        vl, vr = v.split("|", 1)
        if side == "left" and ur == vr and ul != vl:
            out.append(ray[eidx[edge_key(ul, vl)]])
        elif side == "right" and ul == vl and ur != vr:
            out.append(ray[eidx[edge_key(ur, vr)]])
        else:
            out.append(Fraction(0))
    return tuple(out)


def product_framework(a: Framework, b: Framework) -> Framework:
    """Cartesian product; edges are factor edges times opposite vertices."""
    ids = []
    coords = []
    for ua, ca in zip(a.vertex_ids, a.coords):
        for ub, cb in zip(b.vertex_ids, b.coords):
            ids.append(f"{ua}|{ub}")
            coords.append(ca + cb)
    edges = []
    for u, v in a.edges:
        for w in b.vertex_ids:
            edges.append(edge_key(f"{u}|{w}", f"{v}|{w}"))
    for u, v in b.edges:
        for w in a.vertex_ids:
            edges.append(edge_key(f"{w}|{u}", f"{w}|{v}"))
    return Framework(tuple(ids), tuple(coords), tuple(sorted(edges)))


@dataclass
class ProductReport:
    dim_left: int
    dim_right: int
    dim_product: int
    dims_add_up: bool
    partition_is_lift: bool


def product_report(a: Framework, b: Framework) -> ProductReport:
    """Check that deformations of a product are products of deformations.

    Verifies the dimension law and that the dependency blocks of the
    product are exactly the lifted factor blocks matched through the edge
    classes.
    """
    prod = product_framework(a, b)
    da, db, dp = dc_dimension(a), dc_dimension(b), dc_dimension(prod)
    lifted: list[frozenset] = []
    for factor, side in ((a, "left"), (b, "right")):
        for block in dependency_partition(factor):
            lift = set()
            for u, v in prod.edges:
                ul, ur = u.split("|", 1)
                vl, vr = v.split("|", 1)
                if side == "left" and ur == vr and edge_key(ul, vl) in block:
                    lift.add((u, v))
                if side == "right" and ul == vl and edge_key(ur, vr) in block:
                    lift.add((u, v))
            lifted.append(frozenset(lift))
    got = set(dependency_partition(prod))
    return ProductReport(da, db, dp, dp == da + db, got == set(lifted))
