"""Exact linear algebra of quiver representations over a bound algebra.

Hom spaces, kernels/cokernels, tops and socles, minimal projective
presentations, the AR translate via transpose-dual, thin submodule lattices
and isomorphism certificates.  All arithmetic is rational and deterministic.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import BoundAlgebra, Path, PathCombo, PathMatrix
from .errors import RelationViolation, ShapeError, UnsupportedInput, VertexError
from .linalg import Matrix
from .quiver import Arrow, Vertex


class Representation:
    """A representation of the bound quiver: dims per vertex, a matrix per arrow.

    Matrices map source to target (shape target_dim x source_dim).  Relation
    compositions are checked at construction.
    """

    def __init__(
        self,
        algebra: BoundAlgebra,
        dims: dict[Vertex, int],
        maps: Optional[dict[Arrow, Matrix]] = None,
        check: bool = True,
    ):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.quiver.vertices}
        if any(d < 0 for d in self.dims.values()):
            raise ShapeError("negative dimension")
        unknown = set(dims) - set(algebra.quiver.vertices)
        if unknown:
            raise VertexError(f"dims given for unknown vertices {unknown}")
        maps = maps or {}
        self.maps: dict[Arrow, Matrix] = {}
        for arrow in algebra.quiver.arrows:
            src, dst = arrow
            mat = maps.get(arrow)
            if mat is None:
                mat = Matrix.zeros(self.dims[dst], self.dims[src])
            if mat.shape != (self.dims[dst], self.dims[src]):
                raise ShapeError(
                    f"map for {src}->{dst} has shape {mat.shape}, "
                    f"expected {(self.dims[dst], self.dims[src])}"
                )
            self.maps[arrow] = mat
        if check:
            self.check_relations()

    # -- structure ----------------------------------------------------------

    def check_relations(self) -> None:
        for word in self.algebra.forbidden:
            if not word:
                continue
            src = word[0][0]
            composed = self._compose_arrows(word)
            if not composed.is_zero():
                raise RelationViolation(
                    f"composition along forbidden word starting at {src} is nonzero"
                )

    def _compose_arrows(self, arrows: Sequence[Arrow]) -> Matrix:
        mat = Matrix.identity(self.dims[arrows[0][0]])
        for a in arrows:
            mat = self.maps[a] @ mat
        return mat

    def path_action(self, path: Path) -> Matrix:
        """The composed map M_source -> M_target along the path."""
        if path.is_lazy:
            return Matrix.identity(self.dims[path.source])
        return self._compose_arrows(path.arrows)

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.quiver.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def support(self) -> frozenset[Vertex]:
        return frozenset(v for v, d in self.dims.items() if d > 0)

    def is_thin(self) -> bool:
        return all(d <= 1 for d in self.dims.values())

    def is_thin_binary(self) -> bool:
        if not self.is_thin():
            return False
        return all(
            m.is_zero() or m == Matrix([[1]]) for m in self.maps.values() if m.shape == (1, 1)
        )

    def support_is_connected(self) -> bool:
        supp = self.support()
        if not supp:
            return False
        adj = {v: set() for v in supp}
        for (a, b), m in self.maps.items():
            if a in supp and b in supp and not m.is_zero():
                adj[a].add(b)
                adj[b].add(a)
        seen: set[Vertex] = set()
        stack = [next(iter(sorted(supp)))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
        return seen == supp

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Representation)
            and other.algebra is self.algebra
            and other.dims == self.dims
            and other.maps == self.maps
        )

    def __repr__(self) -> str:
        supp = ", ".join(f"{v.label}:{d}" for v, d in sorted(self.dims.items()) if d)
        return f"Rep({supp or '0'})"

    def to_json(self) -> dict:
        data = {
            "dims": {v.label: d for v, d in sorted(self.dims.items()) if d},
            "maps": {
                f"{a.label}->{b.label}": [[str(x) for x in row] for row in m.rows]
                for (a, b), m in sorted(self.maps.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))
                if m.nrows and m.ncols
            },
        }
        if self.is_thin():
            data["support"] = [v.label for v in sorted(self.support())]
        return data


def zero_rep(algebra: BoundAlgebra) -> Representation:
    return Representation(algebra, {}, check=False)


def simple(algebra: BoundAlgebra, x: Vertex) -> Representation:
    if x not in algebra.quiver.vertices:
        raise VertexError(f"{x} not in quiver")
    return Representation(algebra, {x: 1}, check=False)


def projective(algebra: BoundAlgebra, x: Vertex) -> Representation:
    """P(x): basis at y = nonzero paths x -> y; arrows act by appending."""
    if x not in algebra.quiver.vertices:
        raise VertexError(f"{x} not in quiver")
    dims = {y: len(algebra.basis_paths(x, y)) for y in algebra.quiver.vertices}
    maps = {}
    for arrow in algebra.quiver.arrows:
        src, dst = arrow
        src_paths = algebra.basis_paths(x, src)
        dst_paths = algebra.basis_paths(x, dst)
        rows = []
        for p_dst in dst_paths:
            row = []
            for p_src in src_paths:
                extended = p_src.arrows + (arrow,)
                row.append(1 if (not algebra.path_is_zero(extended)) and extended == p_dst.arrows else 0)
            rows.append(row)
        maps[arrow] = Matrix(rows, ncols=len(src_paths))
    return Representation(algebra, dims, maps)


def dual(m: Representation) -> Representation:
    """The k-dual as a representation of the opposite algebra."""
    op = m.algebra.opposite_algebra()
    maps = {}
    for (src, dst), mat in m.maps.items():
        maps[(dst, src)] = mat.transpose()
    return Representation(op, dict(m.dims), maps)


def injective(algebra: BoundAlgebra, x: Vertex) -> Representation:
    """I(x): dual of the opposite projective; basis at y = paths y -> x."""
    return dual(projective(algebra.opposite_algebra(), x))


def thin_from_support(algebra: BoundAlgebra, support: Iterable[Vertex]) -> Representation:
    """Thin representation with dimension 1 on the support and identity maps
    wherever both endpoints are supported.  Raises RelationViolation when the
    support contains a full forbidden subpath."""
    supp = set(support)
    unknown = supp - set(algebra.quiver.vertices)
    if unknown:
        raise VertexError(f"support uses unknown vertices {unknown}")
    dims = {v: 1 for v in supp}
    maps = {}
    for arrow in algebra.quiver.arrows:
        src, dst = arrow
        if src in supp and dst in supp:
            maps[arrow] = Matrix([[1]])
    return Representation(algebra, dims, maps)


def direct_sum(
    summands: Sequence[Representation],
) -> tuple[Representation, list[dict[Vertex, int]]]:
    """Direct sum plus, per summand, the coordinate offset at each vertex."""
    if not summands:
        raise UnsupportedInput("direct_sum of no summands needs an algebra; use zero_rep")
    algebra = summands[0].algebra
    if any(m.algebra is not algebra for m in summands):
        raise ShapeError("direct sum across different algebras")
    offsets: list[dict[Vertex, int]] = []
    dims: dict[Vertex, int] = {v: 0 for v in algebra.quiver.vertices}
    for m in summands:
        offsets.append(dict(dims))
        for v in algebra.quiver.vertices:
            dims[v] += m.dims[v]
    maps = {}
    for arrow in algebra.quiver.arrows:
        maps[arrow] = Matrix.block_diagonal([m.maps[arrow] for m in summands])
    return Representation(algebra, dims, maps, check=False), offsets


class Morphism:
    """A morphism of representations: one rational matrix per vertex."""

    def __init__(
        self,
        source: Representation,
        target: Representation,
        blocks: dict[Vertex, Matrix],
        check: bool = True,
    ):
        if source.algebra is not target.algebra:
            raise ShapeError("morphism across different algebras")
        self.source = source
        self.target = target
        self.blocks: dict[Vertex, Matrix] = {}
        for v in source.algebra.quiver.vertices:
            blk = blocks.get(v)
            if blk is None:
                blk = Matrix.zeros(target.dims[v], source.dims[v])
            if blk.shape != (target.dims[v], source.dims[v]):
                raise ShapeError(
                    f"block at {v} has shape {blk.shape}, "
                    f"expected {(target.dims[v], source.dims[v])}"
                )
            self.blocks[v] = blk
        if check:
            self.check_commutes()

    def check_commutes(self) -> None:
        for arrow in self.source.algebra.quiver.arrows:
            src, dst = arrow
            lhs = self.blocks[dst] @ self.source.maps[arrow]
            rhs = self.target.maps[arrow] @ self.blocks[src]
            if lhs != rhs:
                raise ShapeError(f"morphism does not commute at arrow {src}->{dst}")

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks.values())

    def then(self, other: "Morphism") -> "Morphism":
        """self followed by other (other ∘ self)."""
        if other.source is not self.target:
            # allow composition when dims agree even if objects differ
            if other.source.dims != self.target.dims:
                raise ShapeError("composition shape mismatch")
        blocks = {
            v: other.blocks[v] @ self.blocks[v] for v in self.source.algebra.quiver.vertices
        }
        return Morphism(self.source, other.target, blocks, check=False)

    def add(self, other: "Morphism") -> "Morphism":
        blocks = {v: self.blocks[v] + other.blocks[v] for v in self.blocks}
        return Morphism(self.source, self.target, blocks, check=False)

    def scale(self, c) -> "Morphism":
        return Morphism(
            self.source, self.target, {v: b.scale(c) for v, b in self.blocks.items()}, check=False
        )

    def flatten(self) -> tuple[Fraction, ...]:
        out: list[Fraction] = []
        for v in self.source.algebra.quiver.vertices:
            for row in self.blocks[v].rows:
                out.extend(row)
        return tuple(out)

    def is_isomorphism(self) -> bool:
        if self.source.dims != self.target.dims:
            return False
        return all(b.is_invertible() for b in self.blocks.values())

    @staticmethod
    def identity(m: Representation) -> "Morphism":
        return Morphism(
            m, m, {v: Matrix.identity(m.dims[v]) for v in m.algebra.quiver.vertices}, check=False
        )


# -- Hom spaces ---------------------------------------------------------------


def hom_basis(m: Representation, n: Representation) -> list[Morphism]:
    """Deterministic basis of Hom(M, N): one global exact linear solve of the
    arrow commutation equations."""
    if m.algebra is not n.algebra:
        raise ShapeError("Hom across different algebras")
    algebra = m.algebra
    vertices = algebra.quiver.vertices
    offsets: dict[Vertex, int] = {}
    total = 0
    for v in vertices:
        offsets[v] = total
        total += n.dims[v] * m.dims[v]
    if total == 0:
        return []

    def var(v: Vertex, i: int, j: int) -> int:
        return offsets[v] + i * m.dims[v] + j

    zero_row = [Fraction(0)] * total
    rows: list[list[Fraction]] = []
    for arrow in algebra.quiver.arrows:
        src, dst = arrow
        phi = m.maps[arrow]
        psi = n.maps[arrow]
        for i in range(n.dims[dst]):
            for j in range(m.dims[src]):
                row = zero_row.copy()
                for k in range(m.dims[dst]):
                    row[var(dst, i, k)] += phi.rows[k][j]
                for k in range(n.dims[src]):
                    row[var(src, k, j)] -= psi.rows[i][k]
                rows.append(row)

    if rows:
        kernel = Matrix(rows, ncols=total).kernel_basis()
    else:
        kernel = [tuple(Fraction(1) if i == k else Fraction(0) for i in range(total)) for k in range(total)]

    basis = []
    for vec in kernel:
        blocks = {}
        for v in vertices:
            rows_v = []
            for i in range(n.dims[v]):
                start = offsets[v] + i * m.dims[v]
                rows_v.append(vec[start : start + m.dims[v]])
            blocks[v] = Matrix(rows_v, ncols=m.dims[v])
        basis.append(Morphism(m, n, blocks, check=False))
    return basis


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


# -- kernels, cokernels, tops, socles ----------------------------------------


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    algebra = f.source.algebra
    k_mats: dict[Vertex, Matrix] = {}
    dims: dict[Vertex, int] = {}
    for v in algebra.quiver.vertices:
        basis = f.blocks[v].kernel_basis()
        k_mats[v] = Matrix.from_columns(basis, f.source.dims[v])
        dims[v] = len(basis)
    maps = {}
    for arrow in algebra.quiver.arrows:
        src, dst = arrow
        rhs = f.source.maps[arrow] @ k_mats[src]
        sol = k_mats[dst].solve(rhs)
        if sol is None:
            raise ShapeError("kernel is not arrow-stable; inconsistent solve")
        maps[arrow] = sol
    ker = Representation(algebra, dims, maps, check=False)
    incl = Morphism(ker, f.source, k_mats, check=False)
    return ker, incl


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    algebra = f.target.algebra
    q_mats: dict[Vertex, Matrix] = {}
    dims: dict[Vertex, int] = {}
    for v in algebra.quiver.vertices:
        rows = f.blocks[v].transpose().kernel_basis()
        q_mats[v] = Matrix(rows, ncols=f.target.dims[v])
        dims[v] = len(rows)
    maps = {}
    for arrow in algebra.quiver.arrows:
        src, dst = arrow
        rhs = (q_mats[dst] @ f.target.maps[arrow]).transpose()
        sol = q_mats[src].transpose().solve(rhs)
        if sol is None:
            raise ShapeError("image is not arrow-stable; inconsistent solve")
        maps[arrow] = sol.transpose()
    cok = Representation(algebra, dims, maps, check=False)
    proj = Morphism(f.target, cok, q_mats, check=False)
    return cok, proj


def image_dims(f: Morphism) -> dict[Vertex, int]:
    return {v: b.rank() for v, b in f.blocks.items()}


def radical_matrices(m: Representation) -> dict[Vertex, Matrix]:
    """Per vertex, a matrix whose columns span rad M = sum of incoming images."""
    algebra = m.algebra
    out = {}
    for v in algebra.quiver.vertices:
        incoming = [m.maps[a] for a in algebra.quiver.arrows_into(v)]
        if incoming:
            stacked = incoming[0]
            for extra in incoming[1:]:
                stacked = stacked.hstack(extra)
            out[v] = stacked.column_space_matrix()
        else:
            out[v] = Matrix.zeros(m.dims[v], 0)
    return out


def top_dims(m: Representation) -> dict[Vertex, int]:
    rad = radical_matrices(m)
    return {v: m.dims[v] - rad[v].ncols for v in m.algebra.quiver.vertices}


def top_generators(m: Representation) -> list[tuple[Vertex, tuple[Fraction, ...]]]:
    """Deterministic representatives of a basis of M/rad M."""
    rad = radical_matrices(m)
    gens = []
    for v in m.algebra.quiver.vertices:
        d = m.dims[v]
        if d == 0:
            continue
        aug = rad[v].hstack(Matrix.identity(d))
        _, pivots = aug.rref()
        for c in pivots:
            if c >= rad[v].ncols:
                e = [Fraction(0)] * d
                e[c - rad[v].ncols] = Fraction(1)
                gens.append((v, tuple(e)))
    return gens


def socle_matrices(m: Representation) -> dict[Vertex, Matrix]:
    """Per vertex, columns spanning soc M = joint kernel of outgoing arrows."""
    algebra = m.algebra
    out = {}
    for v in algebra.quiver.vertices:
        outgoing = [m.maps[a] for a in algebra.quiver.arrows_from(v)]
        if outgoing:
            stacked = outgoing[0]
            for extra in outgoing[1:]:
                stacked = stacked.vstack(extra)
            out[v] = Matrix.from_columns(stacked.kernel_basis(), m.dims[v])
        else:
            out[v] = Matrix.identity(m.dims[v])
    return out


def socle_dims(m: Representation) -> dict[Vertex, int]:
    return {v: mat.ncols for v, mat in socle_matrices(m).items()}


# -- projective presentations -------------------------------------------------


@dataclass
class Presentation:
    """Minimal projective presentation P1 --d--> P0 --cover--> M -> 0."""

    module: Representation
    p0_vertices: tuple[Vertex, ...]
    p1_vertices: tuple[Vertex, ...]
    p0: Representation
    p1: Representation
    cover: Morphism
    differential: Morphism
    path_matrix: PathMatrix
    syzygy: Representation
    syzygy_inclusion: Morphism


def projective_cover(m: Representation) -> tuple[Representation, Morphism, tuple[Vertex, ...], list[dict[Vertex, int]]]:
    """The projective cover P0 -> M built from top representatives."""
    algebra = m.algebra
    gens = top_generators(m)
    verts = tuple(v for v, _ in gens)
    if not verts:
        p0 = zero_rep(algebra)
        return p0, Morphism(p0, m, {}, check=False), (), []
    summands = [projective(algebra, v) for v in verts]
    p0, offsets = direct_sum(summands)
    blocks: dict[Vertex, list[list[Fraction]]] = {
        z: [[Fraction(0)] * p0.dims[z] for _ in range(m.dims[z])] for z in algebra.quiver.vertices
    }
    for idx, (x, vec) in enumerate(gens):
        for z in algebra.quiver.vertices:
            for pth_i, pth in enumerate(algebra.basis_paths(x, z)):
                col = offsets[idx][z] + pth_i
                img = m.path_action(pth).apply(vec)
                for row in range(m.dims[z]):
                    blocks[z][row][col] = img[row]
    cover = Morphism(
        p0, m, {z: Matrix(blocks[z], ncols=p0.dims[z]) for z in algebra.quiver.vertices}
    )
    for z in algebra.quiver.vertices:
        if cover.blocks[z].rank() != m.dims[z]:
            raise ShapeError("projective cover is not surjective")
    return p0, cover, verts, offsets


def minimal_projective_presentation(m: Representation) -> Presentation:
    algebra = m.algebra
    p0, cover, verts0, offsets0 = projective_cover(m)
    syz, incl = kernel(cover)
    if syz.is_zero():
        p1 = zero_rep(algebra)
        diff = Morphism(p1, p0, {}, check=False)
        pm = PathMatrix(verts0, (), tuple(() for _ in verts0))
        return Presentation(m, verts0, (), p0, p1, cover, diff, pm, syz, incl)
    p1, cover1, verts1, offsets1 = projective_cover(syz)
    diff = cover1.then(incl)
    entries: list[list[PathCombo]] = [[() for _ in verts1] for _ in verts0]
    for j, zj in enumerate(verts1):
        gen_col = offsets1[j][zj]  # lazy path sorts first in P(zj)_zj
        column = diff.blocks[zj].column(gen_col)
        for i, yi in enumerate(verts0):
            combo = []
            for pth_i, pth in enumerate(algebra.basis_paths(yi, zj)):
                coeff = column[offsets0[i][zj] + pth_i]
                if coeff != 0:
                    combo.append((coeff, pth))
            entries[i][j] = tuple(combo)
    pm = PathMatrix(verts0, verts1, tuple(tuple(row) for row in entries))
    return Presentation(m, verts0, verts1, p0, p1, cover, diff, pm, syz, incl)


def realize_path_matrix(algebra: BoundAlgebra, pm: PathMatrix) -> Morphism:
    """The morphism ⊕P(col_j) -> ⊕P(row_i) induced by right-composition with
    the path entries."""
    row_summands = [projective(algebra, v) for v in pm.row_vertices]
    col_summands = [projective(algebra, v) for v in pm.col_vertices]
    if row_summands:
        target, row_off = direct_sum(row_summands)
    else:
        target, row_off = zero_rep(algebra), []
    if col_summands:
        source, col_off = direct_sum(col_summands)
    else:
        source, col_off = zero_rep(algebra), []
    blocks: dict[Vertex, list[list[Fraction]]] = {
        z: [[Fraction(0)] * source.dims[z] for _ in range(target.dims[z])]
        for z in algebra.quiver.vertices
    }
    for j, cj in enumerate(pm.col_vertices):
        for i, ri in enumerate(pm.row_vertices):
            for (coeff, w) in pm.entries[i][j]:
                # generator path q: cj -> z maps to sum of w.q in P(ri)
                for z in algebra.quiver.vertices:
                    for q_idx, q in enumerate(algebra.basis_paths(cj, z)):
                        composed = algebra.compose(w, q)
                        if composed is None:
                            continue
                        p_idx = algebra.basis_paths(ri, z).index(composed)
                        row = row_off[i][z] + p_idx
                        col = col_off[j][z] + q_idx
                        blocks[z][row][col] += coeff
    return Morphism(
        source,
        target,
        {z: Matrix(blocks[z], ncols=source.dims[z]) for z in algebra.quiver.vertices},
    )


# -- AR translate -------------------------------------------------------------


def transpose_of_presentation(algebra: BoundAlgebra, pm: PathMatrix) -> Morphism:
    """Hom(d, A) realized over the opposite algebra."""
    return realize_path_matrix(algebra.opposite_algebra(), pm.transpose())


def tau(m: Representation) -> Representation:
    """AR translate D Tr via the minimal presentation.  Projective direct
    summands contribute nothing (their presentation has no P1 part)."""
    if m.is_zero():
        return zero_rep(m.algebra)
    pres = minimal_projective_presentation(m)
    if not pres.p1_vertices:
        return zero_rep(m.algebra)
    d_op = transpose_of_presentation(m.algebra, pres.path_matrix)
    tr, _ = cokernel(d_op)
    return dual(tr)


def tau_inverse(m: Representation) -> Representation:
    """Tr D; injective direct summands are annihilated."""
    if m.is_zero():
        return zero_rep(m.algebra)
    dm = dual(m)
    pres = minimal_projective_presentation(dm)
    if not pres.p1_vertices:
        return zero_rep(m.algebra)
    d_back = transpose_of_presentation(dm.algebra, pres.path_matrix)
    tr, _ = cokernel(d_back)
    return tr


# -- Ext and stable Hom -------------------------------------------------------


def ext1_dim(m: Representation, n: Representation) -> int:
    """dim Ext^1(M, N) = dim coker(Hom(P0, N) -> Hom(Ω, N)) for the syzygy Ω
    of the projective cover; exact for every M."""
    if m.is_zero() or n.is_zero():
        return 0
    _, cover, _, _ = projective_cover(m)
    syz, incl = kernel(cover)
    if syz.is_zero():
        return 0
    from_k = hom_basis(syz, n)
    if not from_k:
        return 0
    restricted = [incl.then(h).flatten() for h in hom_basis(cover.source, n)]
    restricted = [v for v in restricted if any(x != 0 for x in v)]
    if not restricted:
        return len(from_k)
    return len(from_k) - Matrix(restricted).rank()


def injective_envelope(m: Representation) -> tuple[Representation, Morphism, tuple[Vertex, ...]]:
    """I(M) = ⊕ I(x)^{dim soc_x} with an injective structure map M -> I(M)."""
    algebra = m.algebra
    soc = socle_matrices(m)
    pieces: list[tuple[Vertex, tuple[Fraction, ...]]] = []
    for x in algebra.quiver.vertices:
        s_mat = soc[x]
        if s_mat.ncols == 0:
            continue
        lam_t = s_mat.transpose().solve(Matrix.identity(s_mat.ncols))
        if lam_t is None:
            raise ShapeError("socle basis is degenerate")
        for i in range(s_mat.ncols):
            pieces.append((x, lam_t.column(i)))
    if not pieces:
        env = zero_rep(algebra)
        return env, Morphism(m, env, {}, check=False), ()
    verts = tuple(x for x, _ in pieces)
    summands = [injective(algebra, x) for x in verts]
    env, offsets = direct_sum(summands)
    blocks = {
        y: [[Fraction(0)] * m.dims[y] for _ in range(env.dims[y])]
        for y in algebra.quiver.vertices
    }
    for idx, (x, lam) in enumerate(pieces):
        lam_row = Matrix([lam])
        for y in algebra.quiver.vertices:
            for w_idx, w in enumerate(algebra.basis_paths(y, x)):
                row_vals = (lam_row @ m.path_action(w)).rows[0]
                target_row = offsets[idx][y] + w_idx
                for j in range(m.dims[y]):
                    blocks[y][target_row][j] += row_vals[j]
    emb = Morphism(
        m, env, {y: Matrix(blocks[y], ncols=m.dims[y]) for y in algebra.quiver.vertices}
    )
    for y in algebra.quiver.vertices:
        if emb.blocks[y].transpose().rank() != m.dims[y]:
            raise ShapeError("injective envelope map is not injective")
    return env, emb, verts


def stable_hom_dim(m: Representation, n: Representation, modulo: str) -> int:
    """dim Hom(M, N) minus morphisms factoring through projectives (via the
    projective cover of N) or injectives (via the injective envelope of M)."""
    full = hom_basis(m, n)
    if not full:
        return 0
    if modulo == "projectives":
        p_n, cover, _, _ = projective_cover(n)
        factored = [g.then(cover).flatten() for g in hom_basis(m, p_n)]
    elif modulo == "injectives":
        _, emb, _ = injective_envelope(m)
        factored = [emb.then(h).flatten() for h in hom_basis(emb.target, n)]
    else:
        raise UnsupportedInput(f"modulo must be 'projectives' or 'injectives', got {modulo!r}")
    factored = [v for v in factored if any(x != 0 for x in v)]
    if not factored:
        return len(full)
    return len(full) - Matrix(factored).rank()


# -- isomorphism testing ------------------------------------------------------


def find_isomorphism_reps(m: Representation, n: Representation) -> Optional[Morphism]:
    """An explicit isomorphism M -> N, or None (sound in both directions).

    Tries seeded random combinations of a Hom basis first, then decides
    exactly on the grid {0..D}^k (a polynomial of total degree D that is not
    identically zero cannot vanish on that grid)."""
    if m.dims != n.dims:
        return None
    if m.is_zero():
        return Morphism(m, n, {}, check=False)
    basis = hom_basis(m, n)
    if not basis:
        return None

    def combine(coeffs) -> Morphism:
        out = basis[0].scale(coeffs[0])
        for c, f in zip(coeffs[1:], basis[1:]):
            out = out.add(f.scale(c))
        return out

    rng = random.Random(17)
    for _ in range(40):
        coeffs = [rng.randint(-9, 9) for _ in basis]
        cand = combine(coeffs)
        if cand.is_isomorphism():
            return cand
    degree = m.total_dim
    if (degree + 1) ** len(basis) > 2_000_000:
        raise UnsupportedInput("isomorphism search space too large")
    for coeffs in itertools.product(range(degree + 1), repeat=len(basis)):
        cand = combine(coeffs)
        if cand.is_isomorphism():
            return cand
    return None


def is_isomorphic_reps(m: Representation, n: Representation) -> bool:
    return find_isomorphism_reps(m, n) is not None


def projective_dimension_le1(m: Representation) -> bool:
    """True iff the first syzygy is projective, certified by an explicit
    isomorphism with the projective cover of its top."""
    if m.is_zero():
        return True
    _, cover, _, _ = projective_cover(m)
    syz, _ = kernel(cover)
    if syz.is_zero():
        return True
    candidate, _, _, _ = projective_cover(syz)
    return is_isomorphic_reps(syz, candidate)


# -- thin submodule lattices --------------------------------------------------


@dataclass(frozen=True)
class SubmoduleSet:
    """All submodules of a thin module, as arrow-closed support subsets."""

    support: tuple[Vertex, ...]
    subsets: tuple[frozenset[Vertex], ...]

    @property
    def count(self) -> int:
        return len(self.subsets)

    def dimension_vectors(self) -> dict[tuple[Vertex, ...], int]:
        out: dict[tuple[Vertex, ...], int] = {}
        for sub in self.subsets:
            key = tuple(sorted(sub))
            out[key] = out.get(key, 0) + 1
        return out

    def is_lattice(self) -> bool:
        pool = set(self.subsets)
        return all(
            (a | b) in pool and (a & b) in pool for a in self.subsets for b in self.subsets
        )


def submodules_thin(m: Representation) -> SubmoduleSet:
    """Enumerate arrow-closed subsets of the support of a thin 0/1 module."""
    if not m.is_thin_binary():
        raise UnsupportedInput("submodule enumeration needs a thin module with 0/1 maps")
    supp = sorted(m.support())
    index = {v: i for i, v in enumerate(supp)}
    edges = []
    for (a, b), mat in m.maps.items():
        if a in index and b in index and not mat.is_zero():
            edges.append((index[a], index[b]))
    subsets = []
    for mask in range(1 << len(supp)):
        if all(not (mask >> i) & 1 or (mask >> j) & 1 for (i, j) in edges):
            subsets.append(frozenset(supp[i] for i in range(len(supp)) if (mask >> i) & 1))
    subsets.sort(key=lambda s: (len(s), sorted(v.sort_key() for v in s)))
    return SubmoduleSet(tuple(supp), tuple(subsets))


def classify_submodule_counts(
    lattice: SubmoduleSet, primary: Vertex, secondary: Vertex
) -> tuple[int, int, int]:
    """Counts of submodules (supported at primary, supported at secondary but
    not primary, supported at neither); the zero module lands in 'neither'."""
    at_primary = sum(1 for s in lattice.subsets if primary in s)
    at_secondary = sum(1 for s in lattice.subsets if secondary in s and primary not in s)
    neither = lattice.count - at_primary - at_secondary
    return at_primary, at_secondary, neither
