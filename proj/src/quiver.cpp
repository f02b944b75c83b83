#include "quiverkac/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qk {

int Quiver::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return static_cast<int>(i);
    throw SchemaError("unknown vertex id '" + id + "'");
}

int Quiver::arrow_index(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    throw SchemaError("unknown arrow id '" + id + "'");
}

bool Quiver::has_vertex(const std::string& id) const {
    return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
}

bool Quiver::has_loop_at(int vertex_idx) const {
    const std::string& v = vertices[vertex_idx];
    for (const Arrow& a : arrows)
        if (a.tail == v && a.head == v) return true;
    return false;
}

void Quiver::validate() const {
    std::set<std::string> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw SchemaError("duplicate vertex id");
    std::set<std::string> as;
    for (const Arrow& a : arrows) {
        if (!as.insert(a.id).second) throw SchemaError("duplicate arrow id '" + a.id + "'");
        if (!vs.count(a.tail)) throw SchemaError("arrow '" + a.id + "' has undeclared tail '" + a.tail + "'");
        if (!vs.count(a.head)) throw SchemaError("arrow '" + a.id + "' has undeclared head '" + a.head + "'");
    }
}

std::string Quiver::serialize() const {
    std::ostringstream os;
    os << "V:";
    for (const auto& v : vertices) os << v << ";";
    os << "A:";
    for (const Arrow& a : arrows) os << a.id << "," << a.tail << "," << a.head << ";";
    return os.str();
}

void check_dims(const Quiver& q, const DimVector& alpha) {
    if (alpha.size() != q.vertices.size())
        throw SchemaError("dimension vector length " + std::to_string(alpha.size()) +
                          " does not match vertex count " + std::to_string(q.vertices.size()));
    for (int x : alpha)
        if (x < 0) throw DomainError("negative dimension entry");
}

void GraphWithInvolution::validate() const {
    g.validate();
    size_t n = g.arrows.size();
    if (involution.size() != n) throw SchemaError("involution size mismatch");
    for (size_t i = 0; i < n; ++i) {
        int j = involution[i];
        if (j < 0 || static_cast<size_t>(j) >= n || j == static_cast<int>(i))
            throw SchemaError("involution is not fixed-point free at arrow '" + g.arrows[i].id + "'");
        if (involution[j] != static_cast<int>(i))
            throw SchemaError("involution is not an involution at arrow '" + g.arrows[i].id + "'");
        if (g.arrows[i].head != g.arrows[j].tail)
            throw SchemaError("involution does not exchange head and tail at arrow '" +
                              g.arrows[i].id + "'");
    }
}

std::vector<std::pair<int, int>> GraphWithInvolution::orbits() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < involution.size(); ++i)
        if (static_cast<int>(i) < involution[i]) out.emplace_back(static_cast<int>(i), involution[i]);
    return out;
}

void EquippedGraph::validate() const {
    graph.validate();
    if (phi.size() != graph.g.arrows.size()) throw SchemaError("phi size mismatch");
    for (int x : phi)
        if (x != 0 && x != 1) throw SchemaError("phi values must be 0 or 1");
}

namespace {

// The Tits form lives on all of Z^n; only the length must match.
void check_length(const Quiver& q, const DimVector& alpha) {
    if (alpha.size() != q.vertices.size())
        throw SchemaError("dimension vector length " + std::to_string(alpha.size()) +
                          " does not match vertex count " + std::to_string(q.vertices.size()));
}

}  // namespace

long long quadratic_form(const Quiver& q, const DimVector& alpha) {
    check_length(q, alpha);
    long long s = 0;
    for (int x : alpha) s += static_cast<long long>(x) * x;
    for (const Arrow& a : q.arrows)
        s -= static_cast<long long>(alpha[q.vertex_index(a.tail)]) * alpha[q.vertex_index(a.head)];
    return s;
}

long long bilinear_form(const Quiver& q, const DimVector& alpha, const DimVector& beta) {
    check_length(q, alpha);
    check_length(q, beta);
    DimVector sum(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) sum[i] = alpha[i] + beta[i];
    return quadratic_form(q, sum) - quadratic_form(q, alpha) - quadratic_form(q, beta);
}

GraphWithInvolution doubled_graph(const Quiver& q) {
    GraphWithInvolution out;
    out.g.vertices = q.vertices;
    int n = static_cast<int>(q.arrows.size());
    for (const Arrow& a : q.arrows) out.g.arrows.push_back(a);
    for (const Arrow& a : q.arrows) out.g.arrows.push_back({a.id + "*", a.head, a.tail});
    out.involution.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        out.involution[i] = n + i;
        out.involution[n + i] = i;
    }
    return out;
}

OrientResult orient(const GraphWithInvolution& g, const std::vector<std::string>& choice) {
    g.validate();
    auto orbs = g.orbits();
    std::vector<int> chosen(g.g.arrows.size(), 0);
    for (const std::string& id : choice) chosen[g.g.arrow_index(id)] = 1;
    OrientResult out;
    out.quiver.vertices = g.g.vertices;
    out.phi = chosen;
    for (auto [i, j] : orbs) {
        if (chosen[i] + chosen[j] != 1)
            throw SchemaError("orientation must pick exactly one arrow from the orbit of '" +
                              g.g.arrows[i].id + "'");
        out.quiver.arrows.push_back(g.g.arrows[chosen[i] ? i : j]);
    }
    return out;
}

OrientResult orient_canonical(const GraphWithInvolution& g) {
    std::vector<std::string> choice;
    for (auto [i, j] : g.orbits()) choice.push_back(g.g.arrows[i].id);
    return orient(g, choice);
}

bool support_connected(const Quiver& q, const DimVector& alpha) {
    check_dims(q, alpha);
    int n = static_cast<int>(q.vertices.size());
    std::vector<int> comp(n, -1);
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (alpha[i] > 0) {
            start = i;
            break;
        }
    if (start < 0) return false;
    std::vector<int> stack = {start};
    comp[start] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arrow& a : q.arrows) {
            int t = q.vertex_index(a.tail), h = q.vertex_index(a.head);
            if (alpha[t] == 0 || alpha[h] == 0) continue;
            int other = -1;
            if (t == v) other = h;
            else if (h == v) other = t;
            if (other >= 0 && comp[other] < 0) {
                comp[other] = 0;
                stack.push_back(other);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (alpha[i] > 0 && comp[i] < 0) return false;
    return true;
}

std::string depict(const Quiver& q) {
    std::ostringstream os;
    os << "vertices {";
    for (size_t i = 0; i < q.vertices.size(); ++i) os << (i ? "," : "") << q.vertices[i];
    os << "} arrows {";
    for (size_t i = 0; i < q.arrows.size(); ++i)
        os << (i ? ", " : "") << q.arrows[i].id << ": " << q.arrows[i].tail << "->" << q.arrows[i].head;
    os << "}";
    return os.str();
}

}  // namespace qk
