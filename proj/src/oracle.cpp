#include "quiverkac/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "quiverkac/errors.hpp"

namespace qk {

namespace {

long long checked_pow(long long base, long long exp, long long cap) {
    long long v = 1;
    for (long long i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

// assemble the block-diagonal action of a morphism on the total space
FqMatrix total_matrix(const RepMorphism& theta, const FieldSpec& f, const DimVector& dims) {
    int n = std::accumulate(dims.begin(), dims.end(), 0);
    FqMatrix out(f, n, n);
    int off = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        for (int r = 0; r < dims[i]; ++r)
            for (int c = 0; c < dims[i]; ++c) out(off + r, off + c) = theta[i](r, c);
        off += dims[i];
    }
    return out;
}

std::vector<RepMorphism> morphisms_from_nullspace(const Subspace& sol, const FieldSpec& f,
                                                  const DimVector& dims) {
    std::vector<RepMorphism> basis;
    for (int bi = 0; bi < sol.dim(); ++bi) {
        RepMorphism theta;
        int off = 0;
        for (int d : dims) {
            FqMatrix m(f, d, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) m(r, c) = sol.basis()(bi, off + r * d + c);
            off += d * d;
            theta.push_back(std::move(m));
        }
        basis.push_back(std::move(theta));
    }
    return basis;
}

int theta_offset(const DimVector& dims, int vertex) {
    int off = 0;
    for (int i = 0; i < vertex; ++i) off += dims[i] * dims[i];
    return off;
}

}  // namespace

std::vector<RepMorphism> endomorphism_algebra(const Quiver& q, const QuiverRep& rep) {
    const FieldSpec& f = *rep.field;
    const DimVector& dims = rep.dims;
    int unknowns = 0;
    for (int d : dims) unknowns += d * d;

    // theta_h x_a = x_a theta_t, one equation per output entry per arrow
    std::vector<std::vector<Fq>> eq_rows;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        int t = q.vertex_index(q.arrows[ai].tail);
        int h = q.vertex_index(q.arrows[ai].head);
        const FqMatrix& x = rep.maps[ai];  // dims[h] x dims[t]
        int oh = theta_offset(dims, h), ot = theta_offset(dims, t);
        for (int r = 0; r < dims[h]; ++r)
            for (int c = 0; c < dims[t]; ++c) {
                std::vector<Fq> row(unknowns, 0);
                for (int k = 0; k < dims[h]; ++k)
                    row[oh + r * dims[h] + k] = f.add(row[oh + r * dims[h] + k], x(k, c));
                for (int k = 0; k < dims[t]; ++k)
                    row[ot + k * dims[t] + c] = f.sub(row[ot + k * dims[t] + c], x(r, k));
                eq_rows.push_back(std::move(row));
            }
    }
    FqMatrix sys(f, static_cast<int>(eq_rows.size()), unknowns);
    for (size_t i = 0; i < eq_rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) sys(static_cast<int>(i), j) = eq_rows[i][j];
    return morphisms_from_nullspace(nullspace(sys), f, dims);
}

std::vector<RepMorphism> endomorphism_algebra(const EquippedGraph& eg, const EquippedRep& rep) {
    const FieldSpec& f = *rep.field;
    const Quiver& g = eg.graph.g;
    const DimVector& dims = rep.dims;
    int unknowns = 0;
    for (int d : dims) unknowns += d * d;

    auto orbits = eg.graph.orbits();
    std::vector<std::vector<Fq>> eq_rows;
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        const Arrow& a = g.arrows[orbits[oi].first];
        int t = g.vertex_index(a.tail);
        int h = g.vertex_index(a.head);
        const LinearRelation& rel = rep.relations[oi];
        const FqMatrix& b = rel.space.basis();       // rows (x | y) spanning R
        FqMatrix ann = rel.space.annihilator();      // functionals vanishing on R
        int ot = theta_offset(dims, t), oh = theta_offset(dims, h);
        // (theta_t x, theta_h y) must stay in R for each basis element (x,y)
        for (int bi = 0; bi < b.rows(); ++bi)
            for (int e = 0; e < ann.rows(); ++e) {
                std::vector<Fq> row(unknowns, 0);
                for (int r = 0; r < dims[t]; ++r)
                    for (int k = 0; k < dims[t]; ++k)
                        row[ot + r * dims[t] + k] = f.add(
                            row[ot + r * dims[t] + k], f.mul(ann(e, r), b(bi, k)));
                for (int r = 0; r < dims[h]; ++r)
                    for (int k = 0; k < dims[h]; ++k)
                        row[oh + r * dims[h] + k] =
                            f.add(row[oh + r * dims[h] + k],
                                  f.mul(ann(e, dims[t] + r), b(bi, dims[t] + k)));
                eq_rows.push_back(std::move(row));
            }
    }
    FqMatrix sys(f, static_cast<int>(eq_rows.size()), unknowns);
    for (size_t i = 0; i < eq_rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) sys(static_cast<int>(i), j) = eq_rows[i][j];
    return morphisms_from_nullspace(nullspace(sys), f, dims);
}

EndAnalysis analyze_end(const std::vector<RepMorphism>& basis, const FieldSpec& f,
                        const Budgets& budgets) {
    EndAnalysis out;
    out.dim = static_cast<int>(basis.size());
    if (out.dim == 0) return out;
    if (out.dim > budgets.max_end_dim ||
        checked_pow(f.q, out.dim, budgets.max_end_elems) > budgets.max_end_elems)
        throw ResourceError("End dimension " + std::to_string(out.dim) +
                            " exceeds the exhaustive-enumeration budget");

    DimVector dims;
    for (const FqMatrix& m : basis[0]) dims.push_back(m.rows());
    std::vector<FqMatrix> total;
    for (const RepMorphism& th : basis) total.push_back(total_matrix(th, f, dims));
    int n = total[0].rows();

    // coefficient vectors of all non-invertible elements
    std::vector<std::vector<Fq>> nonunits;
    std::vector<int> idx(out.dim, 0);
    const std::vector<Fq>& ord = f.order();
    for (;;) {
        FqMatrix e(f, n, n);
        std::vector<Fq> coeff(out.dim);
        for (int i = 0; i < out.dim; ++i) {
            coeff[i] = ord[idx[i]];
            if (coeff[i] != 0) e = e + total[i].scaled(coeff[i]);
        }
        if (rank(e) < n) nonunits.push_back(std::move(coeff));
        int i = out.dim;
        bool done = true;
        while (i > 0) {
            --i;
            if (++idx[i] < f.q) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
        if (done) break;
    }

    FqMatrix span(f, static_cast<int>(nonunits.size()), out.dim);
    for (size_t i = 0; i < nonunits.size(); ++i)
        for (int j = 0; j < out.dim; ++j) span(static_cast<int>(i), j) = nonunits[i][j];
    int r = rank(span);
    long long subspace_size = checked_pow(f.q, r, budgets.max_end_elems + 1);
    out.local = (static_cast<long long>(nonunits.size()) == subspace_size);
    out.radical_dim = r;
    if (out.local && r >= out.dim)
        throw ConsistencyError("every element of End is a non-unit");
    return out;
}

bool is_absolutely_indecomposable(const Quiver& q, const QuiverRep& rep, const Budgets& budgets) {
    int n = std::accumulate(rep.dims.begin(), rep.dims.end(), 0);
    if (n == 0) throw DomainError("the zero representation has no indecomposability class");
    EndAnalysis a = analyze_end(endomorphism_algebra(q, rep), *rep.field, budgets);
    if (a.local && a.residue_degree() < 1)
        throw ConsistencyError("local End with empty residue field");
    return a.local && a.residue_degree() == 1;
}

bool is_absolutely_indecomposable(const EquippedGraph& eg, const EquippedRep& rep,
                                  const Budgets& budgets) {
    int n = std::accumulate(rep.dims.begin(), rep.dims.end(), 0);
    if (n == 0) throw DomainError("the zero representation has no indecomposability class");
    EndAnalysis a = analyze_end(endomorphism_algebra(eg, rep), *rep.field, budgets);
    return a.local && a.residue_degree() == 1;
}

namespace {

// odometer over the cartesian product of per-vertex GL lists
struct GroupIter {
    const std::vector<std::vector<FqMatrix>>* lists;
    const std::vector<std::vector<FqMatrix>>* inverses;
    std::vector<int> idx;
    bool done = false;

    explicit GroupIter(const std::vector<std::vector<FqMatrix>>& l,
                       const std::vector<std::vector<FqMatrix>>& inv)
        : lists(&l), inverses(&inv), idx(l.size(), 0) {}

    void advance() {
        size_t i = idx.size();
        while (i > 0) {
            --i;
            if (++idx[i] < static_cast<int>((*lists)[i].size())) return;
            idx[i] = 0;
        }
        done = true;
    }
};

void build_gl_lists(const FieldSpec& f, const DimVector& alpha, const Budgets& budgets,
                    std::vector<std::vector<FqMatrix>>& gl, std::vector<std::vector<FqMatrix>>& inv) {
    long long size = 1;
    for (int d : alpha) {
        std::vector<FqMatrix> mats, invs;
        enumerate_matrices(f, d, d, d, [&](const FqMatrix& m) {
            mats.push_back(m);
            invs.push_back(m.inverse());
            return true;
        });
        size *= static_cast<long long>(mats.size());
        if (size > budgets.max_group)
            throw ResourceError("|GL(alpha)| exceeds the group budget of " +
                                std::to_string(budgets.max_group));
        gl.push_back(std::move(mats));
        inv.push_back(std::move(invs));
    }
}

}  // namespace

long long count_abs_indec_quiver(const Quiver& q, const DimVector& alpha,
                                 const std::vector<std::string>& max_rank_arrows,
                                 const FieldSpec& f, const Budgets& budgets, SweepOrder order) {
    check_dims(q, alpha);
    q.validate();
    if (std::accumulate(alpha.begin(), alpha.end(), 0) == 0) return 0;

    std::vector<bool> in_m(q.arrows.size(), false);
    for (const std::string& id : max_rank_arrows) in_m[q.arrow_index(id)] = true;

    std::vector<int> tails, heads;
    long long cells = 0;
    for (const Arrow& a : q.arrows) {
        tails.push_back(q.vertex_index(a.tail));
        heads.push_back(q.vertex_index(a.head));
        cells += static_cast<long long>(alpha[tails.back()]) * alpha[heads.back()];
    }
    if (checked_pow(f.q, cells, budgets.max_points) > budgets.max_points)
        throw ResourceError("q^" + std::to_string(cells) + " representation points exceed the budget");

    std::vector<std::vector<FqMatrix>> gl, gl_inv;
    build_gl_lists(f, alpha, budgets, gl, gl_inv);

    auto key_of = [&](const std::vector<FqMatrix>& maps) {
        std::vector<Fq> k;
        for (const FqMatrix& m : maps) k.insert(k.end(), m.data().begin(), m.data().end());
        return k;
    };
    auto maximal_ok = [&](const std::vector<FqMatrix>& maps) {
        for (size_t ai = 0; ai < maps.size(); ++ai)
            if (in_m[ai] && rank(maps[ai]) != std::min(alpha[tails[ai]], alpha[heads[ai]]))
                return false;
        return true;
    };

    // materialize the admissible points in enumeration order
    std::vector<std::vector<Fq>> points;
    {
        std::vector<FqMatrix> maps;
        for (size_t ai = 0; ai < q.arrows.size(); ++ai)
            maps.emplace_back(f, alpha[heads[ai]], alpha[tails[ai]]);
        std::vector<int> idx(cells, 0);
        const std::vector<Fq>& ord = f.order();
        for (;;) {
            size_t pos = 0;
            for (FqMatrix& m : maps)
                for (Fq& e : m.data()) e = ord[idx[pos++]];
            if (maximal_ok(maps)) points.push_back(key_of(maps));
            long long i = cells;
            bool done = true;
            while (i > 0) {
                --i;
                if (++idx[i] < f.q) {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
            if (done || cells == 0) break;
        }
    }
    if (order == SweepOrder::Reversed) std::reverse(points.begin(), points.end());

    auto maps_of = [&](const std::vector<Fq>& key) {
        std::vector<FqMatrix> maps;
        size_t pos = 0;
        for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
            FqMatrix m(f, alpha[heads[ai]], alpha[tails[ai]]);
            for (Fq& e : m.data()) e = key[pos++];
            maps.push_back(std::move(m));
        }
        return maps;
    };

    std::set<std::vector<Fq>> visited;
    long long count = 0;
    for (const auto& key : points) {
        if (visited.count(key)) continue;
        std::vector<FqMatrix> maps = maps_of(key);
        // generate the full orbit
        for (GroupIter it(gl, gl_inv); !it.done; it.advance()) {
            std::vector<FqMatrix> moved;
            for (size_t ai = 0; ai < maps.size(); ++ai)
                moved.push_back(gl[heads[ai]][it.idx[heads[ai]]] * maps[ai] *
                                gl_inv[tails[ai]][it.idx[tails[ai]]]);
            visited.insert(key_of(moved));
        }
        QuiverRep rep{&f, alpha, maps};
        if (is_absolutely_indecomposable(q, rep, budgets)) ++count;
    }
    return count;
}

long long count_abs_indec_equipped(const EquippedGraph& eg, const DimVector& alpha,
                                   const FieldSpec& f, const Budgets& budgets, SweepOrder order) {
    eg.validate();
    const Quiver& g = eg.graph.g;
    check_dims(g, alpha);
    if (std::accumulate(alpha.begin(), alpha.end(), 0) == 0) return 0;

    auto orbits = eg.graph.orbits();
    // candidate relations per orbit, in deterministic enumeration order
    std::vector<std::vector<LinearRelation>> cands;
    std::vector<int> tails, heads;
    long long total_points = 1;
    for (auto [i, j] : orbits) {
        const Arrow& a = g.arrows[i];
        int t = g.vertex_index(a.tail), h = g.vertex_index(a.head);
        tails.push_back(t);
        heads.push_back(h);
        RelationType ty{eg.phi[i], eg.phi[j]};
        std::vector<LinearRelation> list;
        enumerate_subspaces(f, alpha[t] + alpha[h], std::nullopt, [&](const Subspace& s) {
            LinearRelation r(alpha[t], alpha[h], s);
            if (check_type(r, ty)) list.push_back(std::move(r));
            return true;
        });
        total_points *= static_cast<long long>(list.size());
        if (total_points > budgets.max_points)
            throw ResourceError("relation tuples exceed the enumeration budget");
        cands.push_back(std::move(list));
    }

    std::vector<std::vector<FqMatrix>> gl, gl_inv;
    build_gl_lists(f, alpha, budgets, gl, gl_inv);

    // index tuples over the candidate lists are the enumeration points
    std::vector<std::map<LinearRelation, int>> index_of(cands.size());
    for (size_t oi = 0; oi < cands.size(); ++oi)
        for (size_t k = 0; k < cands[oi].size(); ++k)
            index_of[oi][cands[oi][k]] = static_cast<int>(k);

    std::vector<std::vector<int>> points;
    {
        std::vector<int> idx(cands.size(), 0);
        for (size_t oi = 0; oi < cands.size(); ++oi)
            if (cands[oi].empty()) return 0;
        for (;;) {
            points.push_back(idx);
            size_t i = idx.size();
            bool done = true;
            while (i > 0) {
                --i;
                if (++idx[i] < static_cast<int>(cands[i].size())) {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
            if (done || idx.empty()) break;
        }
    }
    if (order == SweepOrder::Reversed) std::reverse(points.begin(), points.end());

    auto act = [&](const LinearRelation& r, const FqMatrix& gt, const FqMatrix& gh) {
        // basis rows (v|w) -> (gt v | gh w)
        const FqMatrix& b = r.space.basis();
        FqMatrix moved =
            (b.block(0, 0, b.rows(), r.dim_v) * gt.transposed())
                .hcat(b.block(0, r.dim_v, b.rows(), r.dim_w) * gh.transposed());
        return LinearRelation(r.dim_v, r.dim_w, Subspace(f, r.dim_v + r.dim_w, moved));
    };

    std::set<std::vector<int>> visited;
    long long count = 0;
    for (const auto& pt : points) {
        if (visited.count(pt)) continue;
        for (GroupIter it(gl, gl_inv); !it.done; it.advance()) {
            std::vector<int> moved(pt.size());
            for (size_t oi = 0; oi < pt.size(); ++oi) {
                LinearRelation r = act(cands[oi][pt[oi]], gl[tails[oi]][it.idx[tails[oi]]],
                                       gl[heads[oi]][it.idx[heads[oi]]]);
                auto found = index_of[oi].find(r);
                if (found == index_of[oi].end())
                    throw ConsistencyError("group action left the type-valid relation set");
                moved[oi] = found->second;
            }
            visited.insert(std::move(moved));
        }
        EquippedRep rep{&f, alpha, {}};
        for (size_t oi = 0; oi < pt.size(); ++oi) rep.relations.push_back(cands[oi][pt[oi]]);
        if (is_absolutely_indecomposable(eg, rep, budgets)) ++count;
    }
    return count;
}

}  // namespace qk
