#include "quiverkac/relation.hpp"

#include "quiverkac/errors.hpp"

namespace qk {

LinearRelation::LinearRelation(int dv, int dw, Subspace s)
    : dim_v(dv), dim_w(dw), space(std::move(s)) {
    if (space.ambient_dim() != dv + dw)
        throw DomainError("relation subspace has wrong ambient dimension");
}

LinearRelation LinearRelation::opposite() const {
    const FqMatrix& b = space.basis();
    const FieldSpec& F = b.field();
    FqMatrix swapped(F, b.rows(), dim_v + dim_w);
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < dim_w; ++j) swapped(i, j) = b(i, dim_v + j);
        for (int j = 0; j < dim_v; ++j) swapped(i, dim_w + j) = b(i, j);
    }
    return LinearRelation(dim_w, dim_v, Subspace(F, dim_v + dim_w, swapped));
}

RelationInvariants relation_invariants(const LinearRelation& r) {
    const FqMatrix& b = r.space.basis();
    const FieldSpec& F = b.field();
    int m = r.dim_v, n = r.dim_w;
    FqMatrix bv = b.block(0, 0, b.rows(), m);
    FqMatrix bw = b.block(0, m, b.rows(), n);

    RelationInvariants out;
    out.def = row_space(bv);
    out.ima = row_space(bw);
    // elements of R with zero W-part: combinations c with c^T bw = 0
    FqMatrix kc = nullspace(bw.transposed()).basis();  // rows c^T
    out.ker = row_space(kc * bv);
    FqMatrix ic = nullspace(bv.transposed()).basis();
    out.ind = row_space(ic * bw);
    out.rank = out.def.dim() - out.ker.dim();
    return out;
}

bool check_type(const LinearRelation& rel, RelationType t) {
    RelationInvariants inv = relation_invariants(rel);
    bool v_ok = t.r == 0 ? inv.ker.dim() == 0 : inv.def.dim() == rel.dim_v;
    bool w_ok = t.s == 0 ? inv.ind.dim() == 0 : inv.ima.dim() == rel.dim_w;
    return v_ok && w_ok;
}

LinearRelation pair_to_relation(RelationType t, const FqMatrix& a, const FqMatrix& b, int dim_v,
                                int dim_w) {
    const FieldSpec& F = a.field();
    int d = t.r == 0 ? a.cols() : a.rows();
    int db = t.s == 0 ? b.cols() : b.rows();
    if (d != db) throw DomainError("middle-space dimensions of a and b disagree");
    if ((t.r == 0 && (a.rows() != dim_v)) || (t.r == 1 && a.cols() != dim_v) ||
        (t.s == 0 && b.rows() != dim_w) || (t.s == 1 && b.cols() != dim_w))
        throw DomainError("configuration shapes do not match the relation type");
    if (rank(a) != d || rank(b) != d)
        throw DomainError("configuration maps must have full middle rank " + std::to_string(d));

    if (t.r == 0 && t.s == 0) {
        // R = {(a(u), b(u))}
        return LinearRelation(dim_v, dim_w,
                              Subspace(F, dim_v + dim_w, a.transposed().hcat(b.transposed())));
    }
    if (t.r == 0 && t.s == 1) {
        // R = {(a(b(w)), w)}
        FqMatrix g = a * b;  // dim_v x dim_w
        return LinearRelation(
            dim_v, dim_w,
            Subspace(F, dim_v + dim_w, g.transposed().hcat(FqMatrix::identity(F, dim_w))));
    }
    if (t.r == 1 && t.s == 0) {
        // R = {(v, b(a(v)))}
        FqMatrix f = b * a;  // dim_w x dim_v
        return LinearRelation(
            dim_v, dim_w,
            Subspace(F, dim_v + dim_w, FqMatrix::identity(F, dim_v).hcat(f.transposed())));
    }
    // (1,1): R = {(v,w) : a(v) = b(w)} = nullspace of [a | -b]
    FqMatrix neg_b = b.scaled(F.neg(1));
    return LinearRelation(dim_v, dim_w, nullspace(a.hcat(neg_b)));
}

namespace {

// factor an n x m matrix f of rank d as f = ell * s with s = top rows of
// rref(f) (d x m, surjective) and ell = f restricted to the pivot columns
// (n x d, injective)
void factor_map(const FqMatrix& f, FqMatrix& surj, FqMatrix& inj) {
    RrefResult r = rref(f);
    surj = r.mat.block(0, 0, r.rank, f.cols());
    inj = FqMatrix(f.field(), f.rows(), r.rank);
    for (int j = 0; j < r.rank; ++j)
        for (int i = 0; i < f.rows(); ++i) inj(i, j) = f(i, r.pivots[j]);
}

// extract f with R = {(v, f v)}; valid when R has type (1,0)
FqMatrix graph_matrix(const LinearRelation& rel) {
    const FqMatrix& b = rel.space.basis();
    // type (1,0) forces dim R = dim_v and RREF basis [I | F^T]
    if (b.rows() != rel.dim_v) throw ConsistencyError("graph relation has wrong dimension");
    return b.block(0, rel.dim_v, rel.dim_v, rel.dim_w).transposed();
}

}  // namespace

RelationFactorization relation_to_pair(const LinearRelation& rel, RelationType t) {
    if (!check_type(rel, t))
        throw DomainError("relation does not have type (" + std::to_string(t.r) + "," +
                          std::to_string(t.s) + ")");
    const FieldSpec& F = rel.space.field();
    RelationFactorization out;
    out.d = relation_invariants(rel).rank;

    if (t.r == 1 && t.s == 0) {
        FqMatrix f = graph_matrix(rel);  // dim_w x dim_v
        factor_map(f, out.a, out.b);     // f = b * a
        return out;
    }
    if (t.r == 0 && t.s == 1) {
        FqMatrix g = graph_matrix(rel.opposite());  // dim_v x dim_w, R = {(g w, w)}
        factor_map(g, out.b, out.a);                // g = a * b
        return out;
    }
    if (t.r == 0 && t.s == 0) {
        const FqMatrix& b = rel.space.basis();  // d x (m+n), projections injective
        out.a = b.block(0, 0, b.rows(), rel.dim_v).transposed();
        out.b = b.block(0, rel.dim_v, b.rows(), rel.dim_w).transposed();
        return out;
    }
    // (1,1): annihilator rows [C_V | C_W], R = {(v,w) : C_V v = -C_W w}
    FqMatrix c = rel.space.annihilator();
    out.a = c.block(0, 0, c.rows(), rel.dim_v);
    out.b = c.block(0, rel.dim_v, c.rows(), rel.dim_w).scaled(F.neg(1));
    return out;
}

}  // namespace qk
