#include "quiverkac/maxrank.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quiverkac/roots.hpp"

namespace qk {

SplitResult split_arrow(const Quiver& q, const std::string& arrow_id) {
    int ai = q.arrow_index(arrow_id);
    Arrow a = q.arrows[ai];

    SplitResult out;
    for (int k = 1;; ++k) {
        std::string v = "v#" + std::to_string(k);
        if (!q.has_vertex(v)) {
            out.new_vertex = v;
            break;
        }
    }
    out.arrow_b = arrow_id + ".b";
    out.arrow_c = arrow_id + ".c";
    out.new_quiver.vertices = q.vertices;
    out.new_quiver.vertices.push_back(out.new_vertex);
    for (int i = 0; i < static_cast<int>(q.arrows.size()); ++i)
        if (i != ai) out.new_quiver.arrows.push_back(q.arrows[i]);
    out.new_quiver.arrows.push_back({out.arrow_b, a.tail, out.new_vertex});
    out.new_quiver.arrows.push_back({out.arrow_c, out.new_vertex, a.head});
    out.new_quiver.validate();
    return out;
}

std::pair<int, int> induction_measure(const Quiver& q, const std::vector<std::string>& m_arrows,
                                      const DimVector& alpha) {
    if (m_arrows.empty()) throw DomainError("induction measure needs a nonempty arrow set");
    check_dims(q, alpha);
    int m = -1, count = 0;
    for (const std::string& id : m_arrows) {
        const Arrow& a = q.arrows[q.arrow_index(id)];
        int v = std::min(alpha[q.vertex_index(a.tail)], alpha[q.vertex_index(a.head)]);
        if (v > m) {
            m = v;
            count = 1;
        } else if (v == m) {
            ++count;
        }
    }
    return {m, count};
}

namespace {

struct RecCtx {
    const MaxrankOptions* opts;
    ArrowChoice choice;
    std::map<std::string, IntPolynomial> memo;
};

std::string memo_key(const Quiver& q, const std::vector<std::string>& m_arrows,
                     const DimVector& alpha) {
    std::ostringstream os;
    os << q.serialize() << "M:";
    for (const auto& id : m_arrows) os << id << ",";
    os << "a:";
    for (int x : alpha) os << x << ",";
    return os.str();
}

IntPolynomial recurse(const Quiver& q, const std::vector<std::string>& m_arrows,
                      const DimVector& alpha, RecCtx& ctx) {
    std::string key = memo_key(q, m_arrows, alpha);
    auto hit = ctx.memo.find(key);
    if (hit != ctx.memo.end()) return hit->second;

    IntPolynomial result;
    if (m_arrows.empty()) {
        result = kac_polynomial(q, alpha, ctx.opts->budgets, ctx.opts->cache);
    } else {
        auto [m, tied] = induction_measure(q, m_arrows, alpha);
        (void)tied;
        // arrow achieving the maximum, per the configured tie-break
        std::string pick;
        for (const std::string& id : m_arrows) {
            const Arrow& a = q.arrows[q.arrow_index(id)];
            if (std::min(alpha[q.vertex_index(a.tail)], alpha[q.vertex_index(a.head)]) != m)
                continue;
            pick = id;
            if (ctx.choice == ArrowChoice::SmallestDeclared) break;
        }
        std::vector<std::string> rest;
        for (const std::string& id : m_arrows)
            if (id != pick) rest.push_back(id);

        result = recurse(q, rest, alpha, ctx);
        if (m > 0) {
            SplitResult split = split_arrow(q, pick);
            std::vector<std::string> sub_m = rest;
            sub_m.push_back(split.arrow_b);
            sub_m.push_back(split.arrow_c);
            long long top_degree = 1 - quadratic_form(q, alpha);
            for (int d = 0; d < m; ++d) {
                DimVector alpha_d = alpha;
                alpha_d.push_back(d);
                IntPolynomial term = recurse(split.new_quiver, sub_m, alpha_d, ctx);
                // the splitting identity forces strictly smaller degrees
                if (!term.is_zero() && term.degree() >= top_degree)
                    throw ConsistencyError("stratum term " + term.pretty() +
                                           " reaches the leading degree");
                result = result - term;
            }
        }
    }

    // theorem-level consistency: zero off roots, monic of degree 1-q on roots
    if (classify_root(q, alpha).tag == RootTag::NotRoot) {
        if (!result.is_zero())
            throw ConsistencyError("nonzero count polynomial " + result.pretty() +
                                   " for a non-root dimension vector");
    } else {
        long long deg = 1 - quadratic_form(q, alpha);
        if (result.degree() != deg)
            throw WrongDegree("count polynomial " + result.pretty() + " has degree " +
                              std::to_string(result.degree()) + ", expected " +
                              std::to_string(deg));
        if (!result.is_monic())
            throw NotMonic("count polynomial " + result.pretty() + " is not monic");
    }

    ctx.memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

IntPolynomial maxrank_polynomial(const Quiver& q, const std::vector<std::string>& m_arrows,
                                 const DimVector& alpha, const MaxrankOptions& opts) {
    q.validate();
    check_dims(q, alpha);
    for (const std::string& id : m_arrows) q.arrow_index(id);  // validate ids

    RecCtx ctx{&opts, opts.choice, {}};
    IntPolynomial result = recurse(q, m_arrows, alpha, ctx);

    if (opts.cross_check_choice) {
        RecCtx other{&opts,
                     opts.choice == ArrowChoice::SmallestDeclared ? ArrowChoice::LargestDeclared
                                                                  : ArrowChoice::SmallestDeclared,
                     {}};
        IntPolynomial again = recurse(q, m_arrows, alpha, other);
        if (again != result)
            throw ConsistencyError("result depends on the arrow choice: " + result.pretty() +
                                   " vs " + again.pretty());
    }
    return result;
}

}  // namespace qk
